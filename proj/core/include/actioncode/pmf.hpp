#ifndef ACTIONCODE_PMF_HPP
#define ACTIONCODE_PMF_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "actioncode/common.hpp"
#include "actioncode/rng.hpp"

namespace actioncode::info {

// Probability mass function over {0, ..., size-1}. Entries are validated to
// be nonnegative and to sum to one within tol::kProbSum.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  static Pmf uniform(int n);
  static Pmf point_mass(int n, int at);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& probs() const { return probs_; }

  int sample(RngStream& rng) const;

 private:
  std::vector<double> probs_;
};

// Conditional pmf: one Pmf row per input tuple, rows stored row-major in the
// lexicographic order of the input tuple.
class CondPmf {
 public:
  CondPmf(std::vector<int> input_sizes, int output_size, std::vector<double> rows);

  // Convenience for a single conditioning variable.
  static CondPmf from_rows(int input_size, const std::vector<std::vector<double>>& rows);

  const std::vector<int>& input_sizes() const { return input_sizes_; }
  int output_size() const { return output_size_; }
  int row_count() const { return row_count_; }

  int flat_index(int i0) const { return i0; }
  int flat_index(int i0, int i1) const { return i0 * input_sizes_[1] + i1; }

  double at(int flat_in, int out) const {
    return rows_[static_cast<std::size_t>(flat_in) * output_size_ + out];
  }
  std::span<const double> row(int flat_in) const {
    return {rows_.data() + static_cast<std::size_t>(flat_in) * output_size_,
            static_cast<std::size_t>(output_size_)};
  }

  int sample(int flat_in, RngStream& rng) const;

  const std::vector<double>& raw() const { return rows_; }

 private:
  std::vector<int> input_sizes_;
  int output_size_;
  int row_count_;
  std::vector<double> rows_;
};

int sample_from(std::span<const double> probs, RngStream& rng);

}  // namespace actioncode::info

#endif
