#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "evslam/sim/event_sim.hpp"
#include "support/brute_force_events.hpp"

using namespace evslam;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EventSimParams no_refractory() {
  EventSimParams p;
  p.t_ref = 0.0;
  return p;
}

RgbImage gray_frame(int w, int h, double v) { return RgbImage(w, h, v, v, v); }

}  // namespace

TEST_CASE("log_irradiance: pinned values at eps = 1e-3") {
  GrayImage img(3, 1);
  img.data = {255.0, 127.5, 0.0};
  const GrayImage l = log_irradiance(img, 1e-3);
  CHECK(l.data[0] == doctest::Approx(-3.921560938107993e-06).epsilon(1e-9));
  CHECK(l.data[1] == doctest::Approx(-0.6931511021208834).epsilon(1e-12));
  CHECK(l.data[2] == doctest::Approx(-12.449022745701502).epsilon(1e-12));
}

TEST_CASE("simulate_pixel: three upward crossings") {
  auto p = no_refractory();
  double ref = -1.0;
  double last = -kInf;
  const auto c = simulate_pixel(-1.0, -0.65, 0.0, p.frame_dt, ref, last, p);
  CHECK(c.pos == 3);
  CHECK(c.neg == 0);
  CHECK(ref == doctest::Approx(-0.7));

  double oref = -1.0, olast = -kInf;
  const auto oc = testing::brute_force_pixel_events(-1.0, -0.65, 0.0, p.frame_dt, oref,
                                                    olast, p, 100000);
  CHECK(oc.pos == c.pos);
  CHECK(oc.neg == c.neg);
}

TEST_CASE("simulate_pixel: flat level emits nothing and keeps state") {
  auto p = no_refractory();
  double ref = -2.0;
  double last = 13.0;
  const auto c = simulate_pixel(-1.5, -1.5, 13.0, 13.0 + p.frame_dt, ref, last, p);
  CHECK(c.pos == 0);
  CHECK(c.neg == 0);
  CHECK(ref == -2.0);
  CHECK(last == 13.0);
}

TEST_CASE("simulate_pixel: refractory saturates the event rate") {
  EventSimParams p;
  p.t_ref = 1e-4;
  double ref = -3.0;
  double last = -kInf;
  const auto c = simulate_pixel(-3.0, 97.0, 0.0, p.frame_dt, ref, last, p);
  const long cap = static_cast<long>(std::floor(p.frame_dt / p.t_ref));
  CHECK(std::abs(c.pos - cap) <= 1);
  CHECK(c.neg == 0);

  double oref = -3.0, olast = -kInf;
  const auto oc =
      testing::brute_force_pixel_events(-3.0, 97.0, 0.0, p.frame_dt, oref, olast, p, 1000000);
  CHECK(oc.pos == c.pos);
  CHECK(oref == doctest::Approx(ref));
}

TEST_CASE("simulate_pixel rejects non-finite input") {
  auto p = no_refractory();
  double ref = 0.0, last = -kInf;
  CHECK_THROWS_AS(simulate_pixel(std::nan(""), 0.0, 0.0, 1.0, ref, last, p),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_pixel(0.0, kInf, 0.0, 1.0, ref, last, p), std::invalid_argument);
  CHECK_THROWS_AS(simulate_pixel(0.0, 1.0, 1.0, 1.0, ref, last, p), std::invalid_argument);
}

TEST_CASE("simulate_pixel matches the fine-step oracle on random trajectories") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> level(-3.0, 0.5);
  std::uniform_real_distribution<double> c_dist(0.05, 0.3);
  std::uniform_int_distribution<int> segments(1, 4);
  std::uniform_int_distribution<int> refr(0, 1);

  for (int trial = 0; trial < 120; ++trial) {
    EventSimParams p;
    p.c_pos = c_dist(rng);
    p.c_neg = c_dist(rng);
    p.t_ref = refr(rng) ? 1e-4 : 0.0;

    const int n_seg = segments(rng);
    double l_prev = level(rng);
    double ref = l_prev;
    double last = -kInf;
    double oref = ref, olast = last;
    double t = 0.0;
    for (int s = 0; s < n_seg; ++s) {
      const double l_next = level(rng);
      const auto got = simulate_pixel(l_prev, l_next, t, t + p.frame_dt, ref, last, p);
      const auto want = testing::brute_force_pixel_events(l_prev, l_next, t, t + p.frame_dt,
                                                          oref, olast, p, 200000);
      REQUIRE(got.pos == want.pos);
      REQUIRE(got.neg == want.neg);
      REQUIRE(ref == doctest::Approx(oref).epsilon(1e-12));
      t += p.frame_dt;
      l_prev = l_next;
    }
  }
}

TEST_CASE("closed-form count: floor(dL / C) without refractory") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dl(-4.0, 4.0);
  std::uniform_real_distribution<double> c_dist(0.02, 0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    auto p = no_refractory();
    p.c_pos = c_dist(rng);
    p.c_neg = c_dist(rng);
    const double l0 = dl(rng);
    const double delta = dl(rng);
    double ref = l0;
    double last = -kInf;
    const auto c = simulate_pixel(l0, l0 + delta, 0.0, p.frame_dt, ref, last, p);
    if (delta > 0.0) {
      CHECK(c.pos == static_cast<long>(std::floor(delta / p.c_pos)));
      CHECK(c.neg == 0);
    } else if (delta < 0.0) {
      CHECK(c.neg == static_cast<long>(std::floor(-delta / p.c_neg)));
      CHECK(c.pos == 0);
    }
  }
}

TEST_CASE("count is monotone in the contrast threshold") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> dl(0.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double delta = dl(rng);
    auto p = no_refractory();
    long prev_count = std::numeric_limits<long>::max();
    for (double c = 0.05; c <= 0.4; c += 0.05) {
      p.c_pos = c;
      double ref = 0.0, last = -kInf;
      const auto got = simulate_pixel(0.0, delta, 0.0, p.frame_dt, ref, last, p);
      CHECK(got.pos <= prev_count);
      prev_count = got.pos;
    }
  }
}

TEST_CASE("refractory cap bounds total events") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> level(-5.0, 5.0);
  EventSimParams p;
  p.t_ref = 2e-3;
  for (int trial = 0; trial < 200; ++trial) {
    double ref = level(rng), last = -kInf;
    const double l0 = level(rng), l1 = level(rng);
    const auto c = simulate_pixel(l0, l1, 0.0, p.frame_dt, ref, last, p);
    const long cap = static_cast<long>(std::floor(p.frame_dt / p.t_ref)) + 1;
    CHECK(c.pos + c.neg <= cap);
  }
}

TEST_CASE("simulate_frame_pair: identical frames give zero events") {
  auto p = no_refractory();
  const RgbImage f = gray_frame(8, 6, 120.0);
  PixelRefState st = init_ref_state(f, p);
  const EventImage e = simulate_frame_pair(f, f, 0.0, p.frame_dt, st, p);
  for (const double v : e.pos) CHECK(v == 0.0);
  for (const double v : e.neg) CHECK(v == 0.0);
}

TEST_CASE("simulate_frame_pair: single brightening pixel") {
  auto p = no_refractory();
  RgbImage a = gray_frame(4, 3, 100.0);
  RgbImage b = a;
  b.at(2, 1, 0) = 150.0;
  b.at(2, 1, 1) = 150.0;
  b.at(2, 1, 2) = 150.0;
  PixelRefState st = init_ref_state(a, p);
  const EventImage e = simulate_frame_pair(a, b, 0.0, p.frame_dt, st, p);
  // dL = ln 1.5 ~ 0.405465 -> 4 crossings at c = 0.1
  CHECK(e.pos[static_cast<size_t>(1) * 4 + 2] == 4.0);
  double total = 0.0;
  for (const double v : e.pos) total += v;
  for (const double v : e.neg) total += v;
  CHECK(total == 4.0);
}

TEST_CASE("simulate_frame_pair is deterministic from equal state") {
  EventSimParams p;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  RgbImage a(16, 12), b(16, 12);
  for (auto& v : a.data) v = u(rng);
  for (auto& v : b.data) v = u(rng);
  PixelRefState s1 = init_ref_state(a, p);
  PixelRefState s2 = init_ref_state(a, p);
  const EventImage e1 = simulate_frame_pair(a, b, 0.0, p.frame_dt, s1, p);
  const EventImage e2 = simulate_frame_pair(a, b, 0.0, p.frame_dt, s2, p);
  CHECK(e1.pos == e2.pos);
  CHECK(e1.neg == e2.neg);
  CHECK(s1.ref_level == s2.ref_level);
}

TEST_CASE("simulate_frame_pair rejects dimension mismatch") {
  EventSimParams p;
  const RgbImage a = gray_frame(4, 3, 10.0);
  const RgbImage b = gray_frame(5, 3, 10.0);
  PixelRefState st = init_ref_state(a, p);
  CHECK_THROWS_AS(simulate_frame_pair(a, b, 0.0, p.frame_dt, st, p), std::invalid_argument);
}

TEST_CASE("init_ref_state: black frame reference and self-consistency") {
  EventSimParams p;
  const RgbImage black = gray_frame(5, 4, 0.0);
  PixelRefState st = init_ref_state(black, p);
  for (const double r : st.ref_level) CHECK(r == doctest::Approx(-12.449022745701502));
  for (const double t : st.last_event_t) CHECK(t == -kInf);

  const RgbImage other = gray_frame(5, 4, 31.0);
  const PixelRefState st2 = init_ref_state(other, p);
  for (size_t i = 0; i < st.ref_level.size(); ++i) CHECK(st.ref_level[i] != st2.ref_level[i]);
}

TEST_CASE("accumulate_events: sums, identities, errors") {
  EventImage z(3, 2);
  EventImage a(3, 2);
  a.pos[0] = 2.0;
  EventImage b(3, 2);
  b.pos[0] = 3.0;
  b.neg[4] = 1.0;

  const EventImage zz = accumulate_events({z, z});
  for (const double v : zz.pos) CHECK(v == 0.0);

  const EventImage single = accumulate_events({a});
  CHECK(single.pos == a.pos);

  const EventImage ab = accumulate_events({a, b});
  CHECK(ab.pos[0] == 5.0);
  CHECK(ab.neg[4] == 1.0);

  const EventImage ba = accumulate_events({b, a});
  CHECK(ab.pos == ba.pos);
  CHECK(ab.neg == ba.neg);
  const EventImage assoc1 = accumulate_events({accumulate_events({a, b}), z});
  const EventImage assoc2 = accumulate_events({a, accumulate_events({b, z})});
  CHECK(assoc1.pos == assoc2.pos);

  CHECK_THROWS_AS(accumulate_events({}), std::invalid_argument);
  EventImage bad(2, 2);
  CHECK_THROWS_AS(accumulate_events({a, bad}), std::invalid_argument);
}

TEST_CASE("params validation") {
  EventSimParams p;
  p.validate();
  p.c_pos = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = EventSimParams{};
  p.frame_dt = 5e-5;  // below t_ref
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
