#include "zpd/enumerate.hpp"

#include <limits>

namespace zpd {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

}  // namespace

std::uint64_t vector_count(std::uint32_t p, std::size_t dim) { return saturating_pow(p, dim); }

std::uint64_t projective_count(std::uint32_t p, std::size_t dim) {
  // 1 + p + ... + p^(dim-1)
  std::uint64_t total = 0, term = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > kSaturated - term) return kSaturated;
    total += term;
    term = term > kSaturated / p ? kSaturated : term * p;
  }
  return total;
}

VectorEnumerator::VectorEnumerator(FieldSpec field, std::size_t dim, EnumerationOptions options)
    : dim_(dim), options_(options) {
  if (!field.is_prime_field()) throw FieldKindError("vector enumeration requires a prime field, got " + field.label());
  p_ = field.p;
  if (options_.projective) {
    count_ = projective_count(p_, dim_);
    if (options_.include_zero && count_ != kSaturated) ++count_;
  } else {
    count_ = vector_count(p_, dim_);
  }
  if (count_ > options_.budget) {
    throw BudgetExceeded("enumerating " + std::string(options_.projective ? "projective points" : "vectors") + " of " +
                             field.label() + "^" + std::to_string(dim) + " needs " + std::to_string(count_) +
                             " steps, budget is " + std::to_string(options_.budget),
                         count_, options_.budget);
  }
  current_.assign(dim_, 0);
  pending_zero_ = options_.projective && options_.include_zero;
}

// Odometer step on positions after lead_ (projective) or on all positions.
bool VectorEnumerator::advance_tail() {
  std::size_t start = options_.projective ? lead_ + 1 : 0;
  for (std::size_t i = dim_; i-- > start;) {
    if (++current_[i] < p_) return true;
    current_[i] = 0;
  }
  return false;
}

bool VectorEnumerator::next(std::vector<std::uint32_t>& out) {
  if (done_) return false;
  if (pending_zero_) {
    pending_zero_ = false;
    out.assign(dim_, 0);
    return true;
  }
  if (!options_.projective) {
    if (!started_) {
      started_ = true;
    } else if (!advance_tail()) {
      done_ = true;
      return false;
    }
    out = current_;
    return true;
  }

  if (dim_ == 0) {
    done_ = true;
    return false;
  }
  if (!started_) {
    started_ = true;
    lead_ = dim_ - 1;
    current_.assign(dim_, 0);
    current_[lead_] = 1;
  } else if (!advance_tail()) {
    if (lead_ == 0) {
      done_ = true;
      return false;
    }
    --lead_;
    current_.assign(dim_, 0);
    current_[lead_] = 1;
  }
  out = current_;
  return true;
}

}  // namespace zpd
