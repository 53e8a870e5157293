#include "svet/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "svet/parallel.hpp"
#include "svet/rng.hpp"

namespace svet {
namespace {

constexpr double kDegenerateCoefficient = 1e-14;
constexpr double kTieTolerance = 1e-12;

const std::array<BlochVector, 3> kBasis{BlochVector{1, 0, 0}, BlochVector{0, 1, 0},
                                        BlochVector{0, 0, 1}};

}  // namespace

void OptimizerConfig::validate() const {
  if (starts < 1) throw std::invalid_argument("starts must be >= 1");
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
}

CorrelationTensor::CorrelationTensor(const PureState3& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        t_[9 * i + 3 * j + k] = expectation(s, tensor3(pauli(i), pauli(j), pauli(k)));
}

BlochVector CorrelationTensor::contract_ab(const BlochVector& a, const BlochVector& b) const {
  const std::array<double, 3> av{a.x, a.y, a.z};
  const std::array<double, 3> bv{b.x, b.y, b.z};
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (av[i] == 0.0) continue;
    for (int j = 0; j < 3; ++j) {
      const double w = av[i] * bv[j];
      for (int k = 0; k < 3; ++k) out[k] += w * t_[9 * i + 3 * j + k];
    }
  }
  return {out[0], out[1], out[2]};
}

double CorrelationTensor::contract(const BlochVector& a, const BlochVector& b,
                                   const BlochVector& c) const {
  return contract_ab(a, b).dot(c);
}

double CorrelationTensor::svetlichny(const MeasurementSettings& m) const {
  const std::array<const BlochVector*, 2> A{&m.a(), &m.a_p()};
  const std::array<const BlochVector*, 2> B{&m.b(), &m.b_p()};
  const std::array<const BlochVector*, 2> C{&m.c(), &m.c_p()};
  double sum = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const BlochVector ab = contract_ab(*A[i], *B[j]);
      for (int k = 0; k < 2; ++k) sum += svetlichny_sign(i, j, k) * ab.dot(*C[k]);
    }
  return sum;
}

BlochVector slot_coefficient(const CorrelationTensor& t, const MeasurementSettings& m,
                             Slot which) {
  MeasurementSettings probe = m;
  probe[which] = {0.0, 0.0, 0.0};
  const double offset = t.svetlichny(probe);
  std::array<double, 3> g{};
  for (int i = 0; i < 3; ++i) {
    probe[which] = kBasis[i];
    g[i] = t.svetlichny(probe) - offset;
  }
  return {g[0], g[1], g[2]};
}

BlochVector best_response(const CorrelationTensor& t, const MeasurementSettings& m,
                          Slot which) {
  const BlochVector g = slot_coefficient(t, m, which);
  const double n = g.norm();
  if (n < kDegenerateCoefficient) return m[which];
  return (1.0 / n) * g;
}

BlochVector best_response(const PureState3& s, const MeasurementSettings& m, Slot which) {
  return best_response(CorrelationTensor(s), m, which);
}

MeasurementSettings random_settings(std::uint64_t seed, std::uint64_t run) {
  const CounterStream stream(seed, run);
  MeasurementSettings m;
  for (std::size_t slot = 0; slot < 6; ++slot) {
    // Gaussian triples are rotation invariant; redraw on the (measure zero)
    // chance of a vanishing norm.
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t base = 3 * (6 * attempt + slot);
      const BlochVector g{stream.normal(base), stream.normal(base + 1),
                          stream.normal(base + 2)};
      const double n = g.norm();
      if (n > 1e-8) {
        m.v[slot] = (1.0 / n) * g;
        break;
      }
    }
  }
  return m;
}

MaxResult ascend(const CorrelationTensor& t, MeasurementSettings start,
                 const OptimizerConfig& cfg, std::vector<double>* trace) {
  MaxResult out;
  out.settings = start;
  double value = t.svetlichny(out.settings);
  if (trace) trace->push_back(value);

  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    const double before = value;
    for (Slot slot : kAllSlots) {
      out.settings[slot] = best_response(t, out.settings, slot);
      if (trace) trace->push_back(t.svetlichny(out.settings));
    }
    value = t.svetlichny(out.settings);
    out.sweeps_used = sweep;
    if (value - before < cfg.tol) {
      out.converged = true;
      break;
    }
  }
  out.value = value;
  return out;
}

MaxResult maximize(const PureState3& s, const OptimizerConfig& cfg) {
  cfg.validate();
  const CorrelationTensor t(s);
  MaxResult best;
  for (int run = 0; run < cfg.starts; ++run) {
    MaxResult r = ascend(t, random_settings(cfg.seed, static_cast<std::uint64_t>(run)), cfg);
    r.run_index = run;
    if (run == 0 || r.value > best.value + kTieTolerance) best = r;
  }
  return best;
}

double grid_oracle(const PureState3& s, int n_theta, int n_phi, unsigned threads) {
  if (n_theta < 2 || n_phi < 2) {
    throw std::invalid_argument("grid_oracle needs n_theta >= 2 and n_phi >= 2");
  }
  const double n_dirs = static_cast<double>(n_theta) * n_phi;
  const double cost = n_dirs * n_dirs * n_dirs * n_dirs;
  if (cost > kGridOracleBudget) {
    throw GridTooLargeError("grid_oracle " + std::to_string(n_theta) + "x" +
                            std::to_string(n_phi) + " would evaluate about " +
                            std::to_string(cost) + " points (budget " +
                            std::to_string(kGridOracleBudget) + ")");
  }

  std::vector<BlochVector> dirs;
  dirs.reserve(static_cast<std::size_t>(n_dirs));
  for (int i = 0; i < n_theta; ++i)
    for (int j = 0; j < n_phi; ++j)
      dirs.push_back(BlochVector::from_spherical(std::numbers::pi * i / n_theta,
                                                 2.0 * std::numbers::pi * j / n_phi));
  const std::size_t n = dirs.size();

  const CorrelationTensor t(s);
  std::vector<BlochVector> ab(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ab[a * n + b] = t.contract_ab(dirs[a], dirs[b]);

  // With a, a', b, b' fixed, the coefficients of c and c' are independent and
  // the best response for each contributes the norm of its coefficient.
  std::vector<double> best_per_a(n, -std::numeric_limits<double>::infinity());
  parallel_for(n, threads, [&](std::size_t a) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t ap = 0; ap < n; ++ap)
      for (std::size_t b = 0; b < n; ++b) {
        const BlochVector& ab_ = ab[a * n + b];
        const BlochVector& apb = ab[ap * n + b];
        for (std::size_t bp = 0; bp < n; ++bp) {
          const BlochVector& abp = ab[a * n + bp];
          const BlochVector& apbp = ab[ap * n + bp];
          const double gc = (ab_ + abp + apb - apbp).norm();
          const double gcp = (ab_ - abp - apb - apbp).norm();
          best = std::max(best, gc + gcp);
        }
      }
    best_per_a[a] = best;
  });
  return *std::max_element(best_per_a.begin(), best_per_a.end());
}

}  // namespace svet
