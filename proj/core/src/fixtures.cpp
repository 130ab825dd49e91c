#include "bargain/fixtures.hpp"

#include <stdexcept>

#include "bargain/characterize.hpp"

namespace bargain {

namespace {

Collection make(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [a, b] : pts) v.push_back({a, b});
  return Collection(v);
}

}  // namespace

Collection example1() {
  return make({{1, 0}, {0, 1}, {Rational(99, 100), Rational(99, 100)},
               {Rational(2, 3), Rational(2, 3)}});
}

Collection example2() {
  return make({{1, 1}, {Rational(98, 100), 0}, {0, Rational(98, 100)}});
}

Collection example3(int k) {
  if (k < 0) throw std::invalid_argument("level count must be nonnegative");
  std::vector<Point> pts;
  long copies = 1;
  Rational level(1);
  Rational half(1, 2);
  for (int j = 0; j <= k; ++j) {
    for (long c = 0; c < copies; ++c) pts.push_back({level, Rational(0)});
    for (long c = 0; c < copies; ++c) pts.push_back({Rational(0), level});
    copies *= 3;
    level = level * half;
  }
  return Collection(pts);
}

Collection thm2_a() { return make({{0, 0}, {1, 1}}); }
Collection thm2_ap() { return make({{0, 1}, {1, 0}}); }
Collection thm2_app() { return make({{0, 1}, {1, 1}}); }

Collection thm3_a() { return make({{1, 0}, {0, 1}}); }
Collection thm3_ap() { return make({{1, 0}, {0, 1}, {0, 1}}); }
Collection thm3_app() { return make({{1, 0}, {1, 0}, {0, 1}}); }

Collection thm3_appp(const Rational& eps) {
  Rational mid = Rational(3, 4) + eps * Rational(1, 2);
  if (mid > Rational(1)) throw std::invalid_argument("slack pushes the middle point above 1");
  return make({{1, 0}, {mid, mid}, {0, 1}});
}

std::vector<NamedFixture> standard_fixtures() {
  return {
      {"example1", example1()},
      {"example2", example2()},
      {"example3_k1", example3(1)},
      {"example3_k2", example3(2)},
      {"thm2_A", thm2_a()},
      {"thm2_Ap", thm2_ap()},
      {"thm2_App", thm2_app()},
      {"thm3_A", thm3_a()},
      {"thm3_Ap", thm3_ap()},
      {"thm3_App", thm3_app()},
      {"thm3_Appp", thm3_appp(Rational(1, 4))},
      {"pie_k1", pie_collection(1)},
      {"pie_k2", pie_collection(2)},
      {"pie_k4", pie_collection(4)},
  };
}

}  // namespace bargain
