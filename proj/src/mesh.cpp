#include "reuleaux/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>

#include "reuleaux/errors.hpp"
#include "reuleaux/io.hpp"

namespace reuleaux {

namespace {

using Index = std::uint32_t;
using Loop = std::vector<std::size_t>;

void require_subdiv(int subdiv) {
  if (subdiv < 2) throw DomainError("subdiv must be at least 2, got " + std::to_string(subdiv));
}

// Appends a triangle, flipped if needed so that its normal points away from `inside`.
void emit(TriangleMesh& mesh, std::size_t a, std::size_t b, std::size_t c, const Vec3& inside,
          Provenance tag) {
  if (a == b || b == c || a == c) return;
  const Vec3& pa = mesh.vertices[a];
  const Vec3& pb = mesh.vertices[b];
  const Vec3& pc = mesh.vertices[c];
  const Vec3 normal = cross(pb - pa, pc - pa);
  const Vec3 centroid = (pa + pb + pc) / 3.0;
  if (dot(normal, centroid - inside) < 0.0) std::swap(b, c);
  mesh.triangles.push_back({static_cast<Index>(a), static_cast<Index>(b), static_cast<Index>(c)});
  mesh.provenance.push_back(tag);
}

// Samples of an arc (subdiv + 1 indices, endpoints included); interior points are new vertices.
Loop sample_arc(TriangleMesh& mesh, const Arc& arc, std::size_t from, std::size_t to, int subdiv) {
  Loop out{from};
  for (int k = 1; k < subdiv; ++k)
    out.push_back(mesh.add_vertex(arc_point(arc, arc.sweep * k / subdiv)));
  out.push_back(to);
  return out;
}

Loop sample_geodesic(TriangleMesh& mesh, const Vec3& center, std::size_t from, std::size_t to,
                     int subdiv) {
  const Vec3 a = mesh.vertices[from];
  const Vec3 b = mesh.vertices[to];
  Loop out{from};
  for (int k = 1; k < subdiv; ++k)
    out.push_back(mesh.add_vertex(great_arc_point(center, a, b, static_cast<double>(k) / subdiv)));
  out.push_back(to);
  return out;
}

// Appends `piece` (oriented from `start`) to a boundary loop, dropping its final vertex.
void append_oriented(Loop& loop, const Loop& piece, std::size_t start) {
  if (piece.front() == start) {
    loop.insert(loop.end(), piece.begin(), piece.end() - 1);
  } else {
    loop.insert(loop.end(), piece.rbegin(), piece.rend() - 1);
  }
}

// Fills a star-shaped region of the unit sphere about `center` bounded by `loop`.
void fill_spherical_region(TriangleMesh& mesh, const Vec3& center, const Loop& loop, int rings,
                           Provenance tag) {
  Vec3 mean;
  for (auto v : loop) mean += normalized(mesh.vertices[v] - center);
  const Vec3 pole = center + normalized(mean);
  const std::size_t hub = mesh.add_vertex(pole);
  const std::size_t k_count = loop.size();

  std::vector<Loop> ring_indices;
  for (int r = 1; r < rings; ++r) {
    Loop ring;
    const double f = static_cast<double>(r) / rings;
    for (auto v : loop) ring.push_back(mesh.add_vertex(great_arc_point(center, pole, mesh.vertices[v], f)));
    ring_indices.push_back(std::move(ring));
  }
  ring_indices.push_back(loop);

  const Loop& first = ring_indices.front();
  for (std::size_t k = 0; k < k_count; ++k) emit(mesh, hub, first[k], first[(k + 1) % k_count], center, tag);
  for (std::size_t r = 0; r + 1 < ring_indices.size(); ++r) {
    const Loop& in = ring_indices[r];
    const Loop& out = ring_indices[r + 1];
    for (std::size_t k = 0; k < k_count; ++k) {
      const std::size_t k1 = (k + 1) % k_count;
      emit(mesh, in[k], out[k], out[k1], center, tag);
      emit(mesh, in[k], out[k1], in[k1], center, tag);
    }
  }
}

// Quad grid between consecutive columns; coincident vertices (poles) collapse automatically.
// `inside(l)` is the reference point used to orient the triangles of strip l.
template <class InsideFn>
void fill_grid(TriangleMesh& mesh, const std::vector<Loop>& columns, InsideFn inside, Provenance tag) {
  for (std::size_t l = 0; l + 1 < columns.size(); ++l) {
    const Loop& a = columns[l];
    const Loop& b = columns[l + 1];
    const Vec3 ref = inside(l);
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      emit(mesh, a[k], a[k + 1], b[k + 1], ref, tag);
      emit(mesh, a[k], b[k + 1], b[k], ref, tag);
    }
  }
}

TriangleMesh centers_only(const ReuleauxStructure& s) {
  TriangleMesh mesh;
  for (const auto& p : s.point_set.points()) mesh.add_vertex(p);
  return mesh;
}

struct SpindleFrame {
  Vec3 mid;
  Vec3 axis;
  double psi;
};

SpindleFrame spindle_frame(const ReuleauxStructure& s, const EdgeRecord& e) {
  const Vec3 mid = midpoint(s.point(e.endpoints[0]), s.point(e.endpoints[1]));
  const Vec3 u = s.point(e.supports[0]) - mid;
  const Vec3 v = s.point(e.supports[1]) - mid;
  return {mid, normalized(cross(u, v)), angle_between(u, v)};
}

// Columns of the spindle of edge e, from the geodesic on the sphere about supports[0] to the one
// about supports[1]. Both geodesics run from endpoints[0] to endpoints[1].
std::vector<Loop> spindle_columns(TriangleMesh& mesh, const ReuleauxStructure& s, const EdgeRecord& e,
                                  const Loop& first, const Loop& last, int subdiv) {
  const SpindleFrame f = spindle_frame(s, e);
  std::vector<Loop> columns{first};
  for (int l = 1; l < subdiv; ++l) {
    const double angle = f.psi * l / subdiv;
    Loop col{first.front()};
    for (std::size_t k = 1; k + 1 < first.size(); ++k)
      col.push_back(mesh.add_vertex(f.mid + rotate_about(mesh.vertices[first[k]] - f.mid, f.axis, angle)));
    col.push_back(first.back());
    columns.push_back(std::move(col));
  }
  columns.push_back(last);
  return columns;
}

void emit_spindle(TriangleMesh& mesh, const ReuleauxStructure& s, std::size_t edge_id,
                  const std::vector<Loop>& columns, int subdiv) {
  const EdgeRecord& e = s.edges[edge_id];
  const SpindleFrame f = spindle_frame(s, e);
  const Vec3 start = s.point(e.supports[0]) - f.mid;
  fill_grid(
      mesh, columns,
      [&](std::size_t l) { return f.mid + rotate_about(start, f.axis, f.psi * (l + 0.5) / subdiv); },
      Provenance{PatchKind::Spindle, edge_id});
}

}  // namespace

TriangleMesh tessellate_reuleaux(const ReuleauxStructure& s, int subdiv) {
  require_subdiv(subdiv);
  TriangleMesh mesh = centers_only(s);
  std::vector<Loop> edge_samples;
  for (const auto& e : s.edges) {
    const std::size_t to = e.arc_from == e.endpoints[0] ? e.endpoints[1] : e.endpoints[0];
    edge_samples.push_back(sample_arc(mesh, e.arc, e.arc_from, to, subdiv));
  }
  for (const auto& face : s.faces) {
    Loop loop;
    for (std::size_t i = 0; i < face.size(); ++i)
      append_oriented(loop, edge_samples[face.edge_ids[i]], face.cycle[i]);
    fill_spherical_region(mesh, s.point(face.face_of), loop, subdiv,
                          Provenance{PatchKind::Face, face.face_of});
  }
  return mesh;
}

TriangleMesh tessellate_meissner(const SmoothingPlan& plan, int subdiv) {
  require_subdiv(subdiv);
  const ReuleauxStructure& s = plan.structure();
  TriangleMesh mesh = centers_only(s);

  // Arc samples for kept edges; for smoothed edges, one geodesic per supporting sphere.
  std::vector<Loop> edge_samples(s.edges.size());
  // Geodesics are keyed by sphere and endpoints: when both arcs of a digon face are smoothed,
  // they share one geodesic and the face vanishes.
  std::vector<std::array<Loop, 2>> geodesics(s.edges.size());
  std::map<std::array<std::size_t, 3>, Loop> geodesic_cache;
  for (std::size_t id = 0; id < s.edges.size(); ++id) {
    const auto& e = s.edges[id];
    if (plan.is_smoothed(id)) {
      for (int side = 0; side < 2; ++side) {
        const std::array<std::size_t, 3> key{e.supports[side], e.endpoints[0], e.endpoints[1]};
        auto it = geodesic_cache.find(key);
        if (it == geodesic_cache.end())
          it = geodesic_cache
                   .emplace(key, sample_geodesic(mesh, s.point(e.supports[side]), e.endpoints[0],
                                                 e.endpoints[1], subdiv))
                   .first;
        geodesics[id][side] = it->second;
      }
    } else {
      const std::size_t to = e.arc_from == e.endpoints[0] ? e.endpoints[1] : e.endpoints[0];
      edge_samples[id] = sample_arc(mesh, e.arc, e.arc_from, to, subdiv);
    }
  }

  for (const auto& face : s.faces) {
    const bool collapsed = std::all_of(face.edge_ids.begin(), face.edge_ids.end(),
                                       [&](std::size_t id) { return plan.is_smoothed(id); }) &&
                           face.size() == 2;
    if (collapsed) continue;
    Loop loop;
    for (std::size_t i = 0; i < face.size(); ++i) {
      const std::size_t id = face.edge_ids[i];
      if (plan.is_smoothed(id)) {
        const int side = s.edges[id].supports[0] == face.face_of ? 0 : 1;
        append_oriented(loop, geodesics[id][side], face.cycle[i]);
      } else {
        append_oriented(loop, edge_samples[id], face.cycle[i]);
      }
    }
    fill_spherical_region(mesh, s.point(face.face_of), loop, subdiv,
                          Provenance{PatchKind::Face, face.face_of});
  }

  for (auto id : plan.smoothed()) {
    const auto columns =
        spindle_columns(mesh, s, s.edges[id], geodesics[id][0], geodesics[id][1], subdiv);
    emit_spindle(mesh, s, id, columns, subdiv);
  }
  return mesh;
}

TriangleMesh tessellate_sliver(const ReuleauxStructure& s, std::size_t edge, std::size_t center,
                               int subdiv) {
  require_subdiv(subdiv);
  const EdgeRecord& e = s.edges.at(edge);
  if (center != e.supports[0] && center != e.supports[1])
    throw DomainError("tessellate_sliver: center must support the edge");
  TriangleMesh mesh = centers_only(s);
  const std::size_t to = e.arc_from == e.endpoints[0] ? e.endpoints[1] : e.endpoints[0];
  const Loop arc = sample_arc(mesh, e.arc, e.arc_from, to, subdiv);
  const Loop geo = sample_geodesic(mesh, s.point(center), e.arc_from, to, subdiv);

  // Columns run across the strip: from the geodesic sample to the arc sample at equal fraction.
  const Vec3 xc = s.point(center);
  std::vector<Loop> columns;
  for (std::size_t k = 0; k < arc.size(); ++k) {
    Loop col{geo[k]};
    if (k > 0 && k + 1 < arc.size()) {
      for (int l = 1; l < subdiv; ++l)
        col.push_back(mesh.add_vertex(great_arc_point(xc, mesh.vertices[geo[k]], mesh.vertices[arc[k]],
                                                      static_cast<double>(l) / subdiv)));
      col.push_back(arc[k]);
    } else {
      col.assign(subdiv + 1, geo[k]);
    }
    columns.push_back(std::move(col));
  }
  fill_grid(mesh, columns, [&](std::size_t) { return xc; }, Provenance{PatchKind::Sliver, edge});
  return mesh;
}

TriangleMesh tessellate_spindle(const ReuleauxStructure& s, std::size_t edge, int subdiv) {
  require_subdiv(subdiv);
  const EdgeRecord& e = s.edges.at(edge);
  TriangleMesh mesh = centers_only(s);
  const Loop first = sample_geodesic(mesh, s.point(e.supports[0]), e.endpoints[0], e.endpoints[1], subdiv);
  const Loop last = sample_geodesic(mesh, s.point(e.supports[1]), e.endpoints[0], e.endpoints[1], subdiv);
  emit_spindle(mesh, s, edge, spindle_columns(mesh, s, e, first, last, subdiv), subdiv);
  return mesh;
}

TriangleMesh icosphere(const Vec3& center, double radius, int levels) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> dirs = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                            {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& d : dirs) d = normalized(d);
  std::vector<std::array<Index, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (int level = 0; level < levels; ++level) {
    std::map<std::pair<Index, Index>, Index> cache;
    auto mid = [&](Index a, Index b) {
      const auto key = std::minmax(a, b);
      auto [it, inserted] = cache.try_emplace({key.first, key.second}, 0);
      if (inserted) {
        dirs.push_back(normalized(dirs[a] + dirs[b]));
        it->second = static_cast<Index>(dirs.size() - 1);
      }
      return it->second;
    };
    std::vector<std::array<Index, 3>> next;
    for (const auto& [a, b, c] : tris) {
      const Index ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  TriangleMesh mesh;
  for (const auto& d : dirs) mesh.add_vertex(center + d * radius);
  for (const auto& [a, b, c] : tris) emit(mesh, a, b, c, center, Provenance{PatchKind::Face, 0});
  return mesh;
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) noexcept {
  return 0.5 * norm(cross(b - a, c - a));
}

double mesh_area(const TriangleMesh& m) {
  double area = 0.0;
  for (const auto& [a, b, c] : m.triangles) area += triangle_area(m.vertices[a], m.vertices[b], m.vertices[c]);
  return area;
}

double mesh_volume(const TriangleMesh& m) {
  if (!is_closed(m))
    throw TopologyError("mesh_volume needs a closed mesh; " + std::to_string(boundary_edge_count(m)) +
                        " boundary edges");
  double six_v = 0.0;
  for (const auto& [a, b, c] : m.triangles)
    six_v += dot(m.vertices[a], cross(m.vertices[b], m.vertices[c]));
  return std::abs(six_v) / 6.0;
}

namespace {

std::unordered_map<std::uint64_t, int> directed_edges(const TriangleMesh& m) {
  std::unordered_map<std::uint64_t, int> count;
  count.reserve(m.triangles.size() * 3);
  for (const auto& t : m.triangles)
    for (int k = 0; k < 3; ++k)
      ++count[(static_cast<std::uint64_t>(t[k]) << 32) | t[(k + 1) % 3]];
  return count;
}

}  // namespace

std::size_t boundary_edge_count(const TriangleMesh& m) {
  std::map<std::pair<Index, Index>, int> undirected;
  for (const auto& t : m.triangles)
    for (int k = 0; k < 3; ++k) ++undirected[std::minmax(t[k], t[(k + 1) % 3])];
  return static_cast<std::size_t>(
      std::count_if(undirected.begin(), undirected.end(), [](const auto& kv) { return kv.second == 1; }));
}

bool is_closed(const TriangleMesh& m) {
  if (m.triangles.empty()) return false;
  const auto count = directed_edges(m);
  for (const auto& [key, n] : count) {
    if (n != 1) return false;
    const std::uint64_t reverse = (key << 32) | (key >> 32);
    const auto it = count.find(reverse);
    if (it == count.end() || it->second != 1) return false;
  }
  return true;
}

TriangleMesh weld(const TriangleMesh& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("weld tolerance must be positive");
  struct CellHash {
    std::size_t operator()(const std::array<long long, 3>& c) const noexcept {
      return static_cast<std::size_t>(c[0] * 73856093LL ^ c[1] * 19349663LL ^ c[2] * 83492791LL);
    }
  };
  std::unordered_map<std::array<long long, 3>, std::vector<Index>, CellHash> grid;
  TriangleMesh out;
  std::vector<Index> remap(m.vertices.size());
  auto cell_of = [&](const Vec3& p) {
    return std::array<long long, 3>{static_cast<long long>(std::floor(p.x / tol)),
                                    static_cast<long long>(std::floor(p.y / tol)),
                                    static_cast<long long>(std::floor(p.z / tol))};
  };
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const Vec3& p = m.vertices[i];
    const auto cell = cell_of(p);
    Index found = static_cast<Index>(-1);
    for (long long dx = -1; dx <= 1 && found == static_cast<Index>(-1); ++dx)
      for (long long dy = -1; dy <= 1 && found == static_cast<Index>(-1); ++dy)
        for (long long dz = -1; dz <= 1 && found == static_cast<Index>(-1); ++dz) {
          const auto it = grid.find({cell[0] + dx, cell[1] + dy, cell[2] + dz});
          if (it == grid.end()) continue;
          for (auto cand : it->second)
            if (distance(out.vertices[cand], p) <= tol) {
              found = cand;
              break;
            }
        }
    if (found == static_cast<Index>(-1)) {
      found = static_cast<Index>(out.add_vertex(p));
      grid[cell].push_back(found);
    }
    remap[i] = found;
  }
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    const auto& [a, b, c] = m.triangles[t];
    const Index ra = remap[a], rb = remap[b], rc = remap[c];
    if (ra == rb || rb == rc || ra == rc) continue;
    out.triangles.push_back({ra, rb, rc});
    out.provenance.push_back(t < m.provenance.size() ? m.provenance[t] : Provenance{});
  }
  return out;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

std::string fmt17(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

void export_obj(const TriangleMesh& m, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  for (const auto& v : m.vertices) out << "v " << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
  for (const auto& [a, b, c] : m.triangles) out << "f " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << '\n';
  finish_write(out, path);
}

void export_ply(const TriangleMesh& m, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "ply\nformat ascii 1.0\n"
      << "element vertex " << m.vertices.size() << "\n"
      << "property double x\nproperty double y\nproperty double z\n"
      << "element face " << m.triangles.size() << "\n"
      << "property list uchar int vertex_indices\nend_header\n";
  for (const auto& v : m.vertices) out << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
  for (const auto& [a, b, c] : m.triangles) out << "3 " << a << ' ' << b << ' ' << c << '\n';
  finish_write(out, path);
}

TriangleMesh read_obj(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  TriangleMesh mesh;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 p;
      if (!(ls >> p.x >> p.y >> p.z)) fail("bad vertex record");
      mesh.add_vertex(p);
    } else if (tag == "f") {
      std::vector<Index> poly;
      std::string tok;
      while (ls >> tok) {
        long long idx = 0;
        const auto slash = tok.find('/');
        const std::string head = tok.substr(0, slash);
        const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), idx);
        if (ec != std::errc() || ptr != head.data() + head.size()) fail("bad face index '" + tok + "'");
        if (idx < 0) idx += static_cast<long long>(mesh.vertices.size()) + 1;
        if (idx < 1 || idx > static_cast<long long>(mesh.vertices.size())) fail("face index out of range");
        poly.push_back(static_cast<Index>(idx - 1));
      }
      if (poly.size() < 3) fail("face with fewer than 3 vertices");
      for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
        mesh.triangles.push_back({poly[0], poly[k], poly[k + 1]});
        mesh.provenance.push_back({});
      }
    }
  }
  return mesh;
}

}  // namespace reuleaux
