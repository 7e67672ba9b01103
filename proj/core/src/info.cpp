#include "actioncode/info.hpp"

#include <cmath>

#include "actioncode/common.hpp"

namespace actioncode::info {

namespace {

double check_prob(double p, const char* what) {
  if (!(p >= -tol::kProbSum) || !std::isfinite(p)) {
    throw ValidationError(std::string(what) + ": probability out of range");
  }
  return p < 0 ? 0.0 : p;
}

void check_normalized(double sum, const char* what) {
  if (std::abs(sum - 1.0) > tol::kProbSum) {
    throw ValidationError(std::string(what) + ": probabilities sum to " + std::to_string(sum));
  }
}

}  // namespace

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("Pmf: empty alphabet");
  double sum = 0;
  for (double& p : probs_) {
    p = check_prob(p, "Pmf");
    sum += p;
  }
  check_normalized(sum, "Pmf");
}

Pmf Pmf::uniform(int n) {
  if (n <= 0) throw ValidationError("Pmf::uniform: n must be positive");
  return Pmf(std::vector<double>(n, 1.0 / n));
}

Pmf Pmf::point_mass(int n, int at) {
  if (n <= 0 || at < 0 || at >= n) throw ValidationError("Pmf::point_mass: bad index");
  std::vector<double> p(n, 0.0);
  p[at] = 1.0;
  return Pmf(std::move(p));
}

int sample_from(std::span<const double> probs, RngStream& rng) {
  double u = rng.uniform_double();
  double acc = 0;
  int last = 0;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    if (probs[i] <= 0) continue;
    acc += probs[i];
    last = i;
    if (u < acc) return i;
  }
  return last;  // u landed in the rounding slack at the top
}

int Pmf::sample(RngStream& rng) const { return sample_from(probs_, rng); }

CondPmf::CondPmf(std::vector<int> input_sizes, int output_size, std::vector<double> rows)
    : input_sizes_(std::move(input_sizes)), output_size_(output_size) {
  if (input_sizes_.empty() || output_size_ <= 0) {
    throw ValidationError("CondPmf: empty input or output alphabet");
  }
  row_count_ = 1;
  for (int s : input_sizes_) {
    if (s <= 0) throw ValidationError("CondPmf: nonpositive input alphabet");
    row_count_ *= s;
  }
  if (rows.size() != static_cast<std::size_t>(row_count_) * output_size_) {
    throw ValidationError("CondPmf: table size does not match alphabets");
  }
  rows_ = std::move(rows);
  for (int r = 0; r < row_count_; ++r) {
    double sum = 0;
    for (int o = 0; o < output_size_; ++o) {
      double& p = rows_[static_cast<std::size_t>(r) * output_size_ + o];
      p = check_prob(p, "CondPmf");
      sum += p;
    }
    check_normalized(sum, "CondPmf row");
  }
}

CondPmf CondPmf::from_rows(int input_size, const std::vector<std::vector<double>>& rows) {
  if (static_cast<int>(rows.size()) != input_size) {
    throw ValidationError("CondPmf::from_rows: row count mismatch");
  }
  if (rows.empty() || rows[0].empty()) throw ValidationError("CondPmf::from_rows: empty rows");
  int out = static_cast<int>(rows[0].size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(input_size) * out);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != out) {
      throw ValidationError("CondPmf::from_rows: ragged rows");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CondPmf({input_size}, out, std::move(flat));
}

int CondPmf::sample(int flat_in, RngStream& rng) const { return sample_from(row(flat_in), rng); }

Joint3::Joint3(int nx, int na, int ny, std::vector<double> probs)
    : nx_(nx), na_(na), ny_(ny), p_(std::move(probs)) {
  if (nx_ <= 0 || na_ <= 0 || ny_ <= 0) throw ValidationError("Joint3: nonpositive alphabet");
  if (p_.size() != static_cast<std::size_t>(nx_) * na_ * ny_) {
    throw ValidationError("Joint3: table size does not match alphabets");
  }
  double sum = 0;
  for (double& p : p_) {
    p = check_prob(p, "Joint3");
    sum += p;
  }
  check_normalized(sum, "Joint3");
}

int Joint3::marginal_size(VarMask mask) const {
  int n = 1;
  if (mask & VarX) n *= nx_;
  if (mask & VarA) n *= na_;
  if (mask & VarY) n *= ny_;
  return n;
}

std::vector<double> Joint3::marginal(VarMask mask) const {
  std::vector<double> m(static_cast<std::size_t>(marginal_size(mask)), 0.0);
  for (int x = 0; x < nx_; ++x) {
    for (int a = 0; a < na_; ++a) {
      for (int y = 0; y < ny_; ++y) {
        int idx = 0;
        if (mask & VarX) idx = idx * nx_ + x;
        if (mask & VarA) idx = idx * na_ + a;
        if (mask & VarY) idx = idx * ny_ + y;
        m[idx] += p(x, a, y);
      }
    }
  }
  return m;
}

Joint3 joint_from_factors(const Pmf& px, const CondPmf& pa_given_x, const CondPmf& py_given_xa) {
  const int nx = px.size();
  if (pa_given_x.input_sizes() != std::vector<int>{nx}) {
    throw ValidationError("joint_from_factors: P(A|X) input alphabet mismatch");
  }
  const int na = pa_given_x.output_size();
  if (py_given_xa.input_sizes() != std::vector<int>{nx, na}) {
    throw ValidationError("joint_from_factors: P(Y|X,A) input alphabets mismatch");
  }
  const int ny = py_given_xa.output_size();
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(nx) * na * ny);
  for (int x = 0; x < nx; ++x) {
    for (int a = 0; a < na; ++a) {
      double pxa = px[x] * pa_given_x.at(x, a);
      for (int y = 0; y < ny; ++y) {
        p.push_back(pxa * py_given_xa.at(py_given_xa.flat_index(x, a), y));
      }
    }
  }
  return Joint3(nx, na, ny, std::move(p));
}

double entropy(std::span<const double> probs) {
  double h = 0;
  for (double p : probs) {
    if (p > tol::kProbSkip) h -= p * std::log2(p);
  }
  return h;
}

double entropy(const Pmf& p) { return entropy(std::span<const double>(p.probs())); }

double binary_entropy(double p) {
  if (p < 0 || p > 1) throw ValidationError("binary_entropy: p outside [0,1]");
  double h = 0;
  if (p > tol::kProbSkip) h -= p * std::log2(p);
  if (1 - p > tol::kProbSkip) h -= (1 - p) * std::log2(1 - p);
  return h;
}

double marginal_entropy(const Joint3& j, VarMask vars) {
  if (vars == 0) throw ValidationError("marginal_entropy: empty variable set");
  auto m = j.marginal(vars);
  return entropy(std::span<const double>(m));
}

double cond_entropy(const Joint3& j, VarMask target, VarMask given) {
  if (target == 0) throw ValidationError("cond_entropy: empty target");
  if ((target & given) != 0) throw ValidationError("cond_entropy: target overlaps conditioning set");
  if ((target | given) > (VarX | VarA | VarY)) throw ValidationError("cond_entropy: bad variable id");
  if (given == 0) return marginal_entropy(j, target);

  const int sizes[3] = {j.nx(), j.na(), j.ny()};
  const VarMask ids[3] = {VarX, VarA, VarY};

  auto cond = j.marginal(given);
  int n_target = 1;
  for (int k = 0; k < 3; ++k) {
    if (target & ids[k]) n_target *= sizes[k];
  }

  // p(given, target) gathered per conditioning outcome in one sweep.
  std::vector<double> table(cond.size() * static_cast<std::size_t>(n_target), 0.0);
  for (int x = 0; x < j.nx(); ++x) {
    for (int a = 0; a < j.na(); ++a) {
      for (int y = 0; y < j.ny(); ++y) {
        const int vals[3] = {x, a, y};
        int gi = 0, ti = 0;
        for (int k = 0; k < 3; ++k) {
          if (given & ids[k]) gi = gi * sizes[k] + vals[k];
          if (target & ids[k]) ti = ti * sizes[k] + vals[k];
        }
        table[static_cast<std::size_t>(gi) * n_target + ti] += j.p(x, a, y);
      }
    }
  }

  double h = 0;
  for (std::size_t g = 0; g < cond.size(); ++g) {
    if (cond[g] < tol::kProbSkip) continue;
    double hg = 0;
    for (int t = 0; t < n_target; ++t) {
      double q = table[g * n_target + t];
      if (q > tol::kProbSkip) {
        double c = q / cond[g];
        hg -= c * std::log2(c);
      }
    }
    h += cond[g] * hg;
  }
  return h;
}

double mutual_information(const Joint3& j, VarMask a_set, VarMask b_set) {
  if (a_set == 0 || b_set == 0) throw ValidationError("mutual_information: empty set");
  if ((a_set & b_set) != 0) throw ValidationError("mutual_information: overlapping sets");
  return marginal_entropy(j, a_set) - cond_entropy(j, a_set, b_set);
}

}  // namespace actioncode::info
