#include "actioncode/typicality.hpp"

#include <cmath>

namespace actioncode::sim {

namespace {
constexpr double kCountSlack = 1e-9;
}  // namespace

bool counts_within(std::span<const int> counts, std::span<const double> probs, int n,
                   double eps) {
  for (std::size_t c = 0; c < probs.size(); ++c) {
    double p = probs[c];
    if (p <= tol::kProbSkip) {
      if (counts[c] != 0) return false;
    } else if (std::abs(static_cast<double>(counts[c]) / n - p) > eps + kCountSlack / n) {
      return false;
    }
  }
  return true;
}

bool strongly_typical(SeqView x, SeqView a, SeqView y, const info::Joint3& j,
                      const TypicalitySpec& spec) {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  if (x.size() != n || a.size() != n || y.size() != n) {
    throw ValidationError("strongly_typical: sequence length != n");
  }
  std::vector<int> counts(j.raw().size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] >= j.nx() || a[i] >= j.na() || y[i] >= j.ny()) {
      throw ValidationError("strongly_typical: symbol outside alphabet");
    }
    ++counts[(static_cast<std::size_t>(x[i]) * j.na() + a[i]) * j.ny() + y[i]];
  }
  return counts_within(counts, j.raw(), spec.n, spec.eps);
}

bool strongly_typical_pair(SeqView x, SeqView a, std::span<const double> joint_xa, int nx,
                           int na, const TypicalitySpec& spec) {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  if (x.size() != n || a.size() != n) {
    throw ValidationError("strongly_typical_pair: sequence length != n");
  }
  if (joint_xa.size() != static_cast<std::size_t>(nx) * na) {
    throw ValidationError("strongly_typical_pair: table size mismatch");
  }
  std::vector<int> counts(joint_xa.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++counts[static_cast<std::size_t>(x[i]) * na + a[i]];
  }
  return counts_within(counts, joint_xa, spec.n, spec.eps);
}

void enumerate_typical_triples(const info::Joint3& j, const TypicalitySpec& spec,
                               long long budget,
                               const std::function<void(SeqView, SeqView, SeqView)>& fn) {
  const int n = spec.n;
  if (n < 1) throw ValidationError("enumerate_typical_triples: n must be >= 1");

  struct Cell {
    std::uint8_t x, a, y;
    int min, max;
  };
  std::vector<Cell> cells;
  for (int x = 0; x < j.nx(); ++x) {
    for (int a = 0; a < j.na(); ++a) {
      for (int y = 0; y < j.ny(); ++y) {
        double p = j.p(x, a, y);
        if (p <= tol::kProbSkip) continue;
        int lo = static_cast<int>(std::ceil(n * (p - spec.eps) - kCountSlack));
        int hi = static_cast<int>(std::floor(n * (p + spec.eps) + kCountSlack));
        cells.push_back(Cell{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(a),
                             static_cast<std::uint8_t>(y), std::max(lo, 0), std::min(hi, n)});
      }
    }
  }

  // A deficit larger than the remaining positions can never be repaired;
  // together with per-cell caps this prunes the position DFS hard.
  long long deficit = 0;
  for (const Cell& c : cells) deficit += c.min;

  Seq x(static_cast<std::size_t>(n)), a(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  std::vector<int> counts(cells.size(), 0);
  long long produced = 0;

  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (++produced > budget) {
        throw BudgetError("typical-set enumeration exceeded the candidate budget");
      }
      fn(x, a, y);
      return;
    }
    const int remaining = n - pos;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (counts[c] >= cells[c].max) continue;
      long long d = deficit - (counts[c] < cells[c].min ? 1 : 0);
      if (d > remaining - 1) continue;
      ++counts[c];
      deficit = d;
      x[pos] = cells[c].x;
      a[pos] = cells[c].a;
      y[pos] = cells[c].y;
      rec(pos + 1);
      deficit += counts[c] <= cells[c].min ? 1 : 0;
      --counts[c];
    }
  };
  if (deficit <= n) rec(0);
}

Seq generate_y(SeqView x, SeqView a, const info::CondPmf& py_given_xa, RngStream& rng) {
  if (x.size() != a.size()) throw ValidationError("generate_y: length mismatch");
  Seq y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    int flat = py_given_xa.flat_index(x[i], a[i]);
    y[i] = static_cast<std::uint8_t>(py_given_xa.sample(flat, rng));
  }
  return y;
}

Seq generate_iid(const info::Pmf& p, int n, RngStream& rng) {
  Seq s(static_cast<std::size_t>(n));
  for (auto& sym : s) sym = static_cast<std::uint8_t>(p.sample(rng));
  return s;
}

}  // namespace actioncode::sim
