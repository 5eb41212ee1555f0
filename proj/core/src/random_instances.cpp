#include "mtz/random_instances.hpp"

#include <algorithm>
#include <set>

namespace mtz {

IMat random_unimodular(size_t n, Rng& rng, int steps) {
  IMat u = identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    long long c = coef(rng);
    for (size_t r = 0; r < n; ++r) u[r][a] += c * u[r][b];
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng)) {
    size_t a = pick(rng), b = pick(rng);
    for (size_t r = 0; r < n; ++r) std::swap(u[r][a], u[r][b]);
  }
  return u;
}

ExactSequence random_exact_sequence(size_t n, size_t k, Rng& rng) {
  const IMat u = random_unimodular(n, rng);
  const IMat inv = unimodular_inverse(u);
  ExactSequence s;
  s.i.assign(n, IVec(k));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < k; ++c) s.i[r][c] = u[r][c];
  for (size_t r = k; r < n; ++r) s.j.push_back(inv[r]);
  return s;
}

RawConeFan orthant_fan(size_t n) {
  RawConeFan f;
  f.name = "orthant" + std::to_string(n);
  f.rank = n;
  Cone all;
  for (size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    f.rays.push_back(e);
    all.push_back(i);
  }
  f.max_cones = {all};
  return f;
}

RawConeFan random_subdivided_orthant(size_t n, int steps, Rng& rng) {
  RawConeFan f = orthant_fan(n);
  f.name = "subdivided-orthant" + std::to_string(n);
  f.support_generators = f.rays;
  for (int s = 0; s < steps && n >= 2; ++s) {
    // Pick a maximal cone and a face tau of it with at least two rays.
    const Cone& sigma = f.max_cones[std::uniform_int_distribution<size_t>(0, f.max_cones.size() - 1)(rng)];
    Cone tau;
    while (tau.size() < 2) {
      tau.clear();
      for (size_t r : sigma)
        if (std::uniform_int_distribution<int>(0, 1)(rng)) tau.push_back(r);
    }
    IVec w(n, 0);
    for (size_t r : tau) w = w + f.rays[r];
    const size_t wi = f.rays.size();
    f.rays.push_back(w);
    std::vector<Cone> next;
    for (const Cone& c : f.max_cones) {
      if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) {
        next.push_back(c);
        continue;
      }
      for (size_t drop : tau) {
        Cone d;
        for (size_t r : c)
          if (r != drop) d.push_back(r);
        d.push_back(wi);
        std::sort(d.begin(), d.end());
        next.push_back(d);
      }
    }
    f.max_cones = next;
  }
  return f;
}

}  // namespace mtz
