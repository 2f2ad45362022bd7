#pragma once

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "reuleaux/families.hpp"
#include "reuleaux/geom.hpp"
#include "reuleaux/io.hpp"

namespace reuleaux::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(REULEAUX_DATA_DIR) / name;
}

inline std::vector<Vec3> irregular(const std::string& name) { return read_points(data_path(name + ".txt")); }

inline std::vector<Vec3> tetrahedron() { return pyramid_points(3); }

inline double acos13() { return std::acos(1.0 / 3.0); }

struct Row {
  int n;
  double t;
  double perimeter;
  double volume;
};

// Reference perimeter and volume tables of the three families.
inline const std::vector<Row>& pyramid_table() {
  static const std::vector<Row> rows = {
      {3, 0, 2.9754717165844013, 0.4221577331158264},  {5, 0, 2.987479950727929, 0.44065107464468123},
      {7, 0, 2.9904113459590356, 0.44508906045965013}, {9, 0, 2.9915766744579857, 0.4468455644780944},
      {11, 0, 2.9921578300569203, 0.4477199306410655}, {13, 0, 2.992489472713454, 0.4482184208305563},
      {15, 0, 2.9926965856128667, 0.448529556413958},  {17, 0, 2.992834591165926, 0.4487368010969238},
      {19, 0, 2.9929311619533574, 0.44888178739480866}, {21, 0, 2.9930013781619644, 0.44898718810471205},
      {23, 0, 2.9930540308850655, 0.4490662144272868}, {25, 0, 2.9930945274828598, 0.4491269898003859},
  };
  return rows;
}

inline const std::vector<Row>& elongated_table() {
  static const std::vector<Row> rows = {
      {3, 1.0 / 2, 2.9931270190442447, 0.4434445124846693},
      {5, 3.0 / 4, 3.0631372552821503, 0.48312463940394},
      {7, 3.0 / 4, 3.0771714565245922, 0.4888050312329182},
      {9, 4.0 / 5, 3.078504604790311, 0.4916683622752752},
      {11, 5.0 / 6, 3.0759025640806144, 0.49047575366738516},
      {13, 2.0 / 5, 3.0595001998462337, 0.4821997310410573},
      {15, 1.0 / 5, 3.0268739279677703, 0.4658188594948641},
      {17, 1.0 / 10, 3.0097623900581425, 0.4572829425509739},
  };
  return rows;
}

inline const std::vector<Row>& trapezohedron_table() {
  static const std::vector<Row> rows = {
      {4, 0, 3.0260193893230074, 0.4633014137100808},  {6, 0, 3.017354597556886, 0.45985656689727694},
      {8, 0, 3.0097804740952094, 0.4565559505093948},  {10, 0, 3.0050348605116133, 0.4544886558824768},
      {12, 0, 3.0020158909800587, 0.4531797978430361}, {14, 0, 3.0000079305708978, 0.4523131533481052},
      {16, 0, 2.9986141631682397, 0.45171383711833046}, {18, 0, 2.9976106406122964, 0.451283641743075},
      {20, 0, 2.996865515987847, 0.4509650214589974},  {22, 0, 2.9962977377798055, 0.4507227452212159},
      {24, 0, 2.9958554883177815, 0.4505343676431973}, {26, 0, 2.9955044776712327, 0.4503850797851724},
  };
  return rows;
}

struct Example {
  std::string name;
  double perimeter;
  double volume;
};

inline const std::vector<Example>& irregular_examples() {
  static const std::vector<Example> rows = {
      {"irregular8a", 3.004217845729678, 0.45147884098820945},
      {"irregular8b", 2.96308631315525, 0.42168401162294744},
      {"irregular10", 3.0006801203477895, 0.4499825760002685},
      {"irregular12", 3.0036684374206386, 0.45172374549885497},
  };
  return rows;
}

// 1-based smoothing plans with their reference Meissner perimeter and volume.
inline const std::vector<std::array<std::size_t, 2>> kPlan8a = {{1, 2}, {1, 3}, {1, 5}, {1, 6},
                                                                 {2, 4}, {2, 5}, {2, 7}};
inline constexpr double kMeissner8aP = 2.9968929812165475;
inline constexpr double kMeissner8aV = 0.4512489394116761;
inline const std::vector<std::array<std::size_t, 2>> kPlanD4 = {{7, 9}, {1, 4}, {3, 7}, {1, 8},
                                                                 {8, 9}, {2, 5}, {4, 8}, {3, 4}};
inline constexpr double kMeissnerD4P = 3.0207439602029265;
inline constexpr double kMeissnerD4V = 0.4631744289048656;

inline std::vector<std::array<std::size_t, 2>> zero_based(std::vector<std::array<std::size_t, 2>> pairs) {
  for (auto& p : pairs) p = {p[0] - 1, p[1] - 1};
  return pairs;
}

// Random rotation (uniform axis and angle) followed by a translation.
struct RigidMotion {
  Vec3 axis;
  double angle;
  Vec3 shift;

  Vec3 operator()(const Vec3& p) const { return rotate_about(p, axis, angle) + shift; }
};

inline RigidMotion random_motion(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  Vec3 axis{gauss(rng), gauss(rng), gauss(rng)};
  return {normalized(axis), angle(rng), {shift(rng), shift(rng), shift(rng)}};
}

inline std::vector<Vec3> moved(const std::vector<Vec3>& pts, const RigidMotion& m) {
  std::vector<Vec3> out;
  for (const auto& p : pts) out.push_back(m(p));
  return out;
}

}  // namespace reuleaux::testing
