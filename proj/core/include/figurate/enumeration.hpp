#pragma once

// Lazy generators for the constrained tuples that the coefficient formulas
// sum over. Each generator is a single-consumer input range: pull tuples with
// advance()/current() or iterate with range-for. Nothing is materialized.
//
// Ordering is deterministic: ascending tuple length, lexicographic within a
// length.

#include <cstddef>
#include <iterator>
#include <vector>

namespace figurate {

/// Nonnegative m-tuple with its content (sum) and support (positive count).
class KTuple {
 public:
  KTuple() = default;
  explicit KTuple(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  long content() const { return content_; }
  long support() const { return support_; }

 private:
  std::vector<int> entries_;
  long content_ = 0;
  long support_ = 0;
};

/// Positive m-tuple; big_count() is the number of entries >= 2.
class JTuple {
 public:
  JTuple() = default;
  explicit JTuple(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  long sum() const { return sum_; }
  long big_count() const { return big_count_; }

 private:
  std::vector<int> entries_;
  long sum_ = 0;
  long big_count_ = 0;
};

struct Composition {
  std::vector<int> parts;
  long total = 0;
};

namespace detail {

/// Remaining budget while filling a tuple left to right.
struct Cursor {
  long sum_left = 0;
  long marks_left = 0;  // positive entries (k-tuples) or entries >= 2 (j-tuples)
  bool prev_marked = false;
};

/// Input iterator over any generator exposing advance()/current().
template <class Generator>
class GeneratorIterator {
 public:
  using value_type = typename Generator::value_type;
  using difference_type = std::ptrdiff_t;
  using iterator_category = std::input_iterator_tag;

  GeneratorIterator() = default;
  explicit GeneratorIterator(Generator* gen) : gen_(gen) { step(); }

  const value_type& operator*() const { return gen_->current(); }
  const value_type* operator->() const { return &gen_->current(); }
  GeneratorIterator& operator++() {
    step();
    return *this;
  }
  void operator++(int) { step(); }

  friend bool operator==(const GeneratorIterator& it, std::default_sentinel_t) {
    return it.gen_ == nullptr;
  }

 private:
  void step() {
    if (gen_ != nullptr && !gen_->advance()) gen_ = nullptr;
  }
  Generator* gen_ = nullptr;
};

}  // namespace detail

/// All m-tuples (k_1..k_m) of nonnegative integers with content ell, support
/// s = m + ell + 1 - p and no two consecutive positive entries. Requires
/// p >= 1 and 0 <= ell <= p - 1 (DomainError otherwise).
class KTupleGenerator {
 public:
  using value_type = KTuple;

  KTupleGenerator(long p, long ell);

  /// Moves to the next tuple; false once exhausted.
  bool advance();
  const KTuple& current() const { return current_; }

  detail::GeneratorIterator<KTupleGenerator> begin() { return detail::GeneratorIterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool start_length();

  long p_;
  long ell_;
  long support_;  // support of the current length block
  long length_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> entries_;
  std::vector<detail::Cursor> cursors_;
  KTuple current_;
};

/// All positive m-tuples (j_1..j_m) with j_i >= 2 implying j_{i+1} = 1,
/// sum ell + m and m = p + t - ell - 1 where t counts entries >= 2. These are
/// the k-tuples above shifted by +1, generated from their own constraints.
class JTupleGenerator {
 public:
  using value_type = JTuple;

  JTupleGenerator(long p, long ell);

  bool advance();
  const JTuple& current() const { return current_; }

  detail::GeneratorIterator<JTupleGenerator> begin() { return detail::GeneratorIterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool start_length();

  long p_;
  long ell_;
  long bigs_;
  long length_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> entries_;
  std::vector<detail::Cursor> cursors_;
  JTuple current_;
};

/// Ordered compositions of `total` into exactly `parts` parts, each at least
/// `min_part`. Empty when total < parts * min_part. Requires parts >= 1 and
/// min_part >= 1.
class CompositionGenerator {
 public:
  using value_type = Composition;

  CompositionGenerator(long total, long parts, long min_part);

  bool advance();
  const Composition& current() const { return current_; }

  detail::GeneratorIterator<CompositionGenerator> begin() {
    return detail::GeneratorIterator(this);
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  long min_part_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> entries_;
  std::vector<detail::Cursor> cursors_;
  Composition current_;
};

inline KTupleGenerator enumerate_k_tuples(long p, long ell) { return {p, ell}; }
inline JTupleGenerator enumerate_j_tuples(long p, long ell) { return {p, ell}; }
inline CompositionGenerator enumerate_compositions(long total, long parts, long min_part) {
  return {total, parts, min_part};
}

}  // namespace figurate
