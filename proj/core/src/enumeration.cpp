#include "figurate/enumeration.hpp"

#include <optional>
#include <string>
#include <utility>

#include "figurate/exact.hpp"

namespace figurate {
namespace {

using detail::Cursor;

void require_coefficient_range(long p, long ell) {
  if (p < 1 || ell < 0 || ell > p - 1) {
    throw DomainError("tuple enumeration requires p >= 1 and 0 <= ell <= p-1 (got p=" +
                      std::to_string(p) + ", ell=" + std::to_string(ell) + ")");
  }
}

/// Most marked entries that fit in `slots` positions with no two adjacent,
/// given whether the position just before them is marked.
long mark_capacity(long slots, bool prev_marked) {
  const long usable = slots - (prev_marked ? 1 : 0);
  return usable <= 0 ? 0 : (usable + 1) / 2;
}

// Per-family rules. Each exposes
//   bool feasible(slots_left, cursor)      -- some completion exists
//   std::optional<int> smallest(pos, cursor, after)
//                                          -- least value > after at pos that
//                                             keeps the suffix feasible
//   Cursor step(cursor, value)

struct KRules {
  long length;

  static bool feasible(long slots, const Cursor& c) {
    if (c.marks_left == 0) return c.sum_left == 0;
    return c.sum_left >= c.marks_left && c.marks_left <= mark_capacity(slots, c.prev_marked);
  }

  static Cursor step(const Cursor& c, int v) {
    if (v == 0) return {c.sum_left, c.marks_left, false};
    return {c.sum_left - v, c.marks_left - 1, true};
  }

  std::optional<int> smallest(std::size_t pos, const Cursor& c, int after) const {
    const long slots_after = length - static_cast<long>(pos) - 1;
    if (after < 0 && feasible(slots_after, step(c, 0))) return 0;
    if (c.prev_marked || c.marks_left == 0) return std::nullopt;
    for (long v = std::max<long>(after + 1, 1); v <= c.sum_left; ++v) {
      if (feasible(slots_after, step(c, static_cast<int>(v)))) return static_cast<int>(v);
    }
    return std::nullopt;
  }
};

struct JRules {
  long length;

  // Every remaining slot holds at least 1; each big entry needs at least one
  // unit of excess on top of that.
  static bool feasible(long slots, const Cursor& c) {
    const long excess = c.sum_left - slots;
    if (c.marks_left == 0) return excess == 0;
    return excess >= c.marks_left && c.marks_left <= mark_capacity(slots, c.prev_marked);
  }

  static Cursor step(const Cursor& c, int v) {
    if (v == 1) return {c.sum_left - 1, c.marks_left, false};
    return {c.sum_left - v, c.marks_left - 1, true};
  }

  std::optional<int> smallest(std::size_t pos, const Cursor& c, int after) const {
    const long slots_after = length - static_cast<long>(pos) - 1;
    if (after < 1 && feasible(slots_after, step(c, 1))) return 1;
    if (c.prev_marked || c.marks_left == 0) return std::nullopt;
    for (long v = std::max<long>(after + 1, 2); v <= c.sum_left; ++v) {
      if (feasible(slots_after, step(c, static_cast<int>(v)))) return static_cast<int>(v);
    }
    return std::nullopt;
  }
};

struct CompositionRules {
  long length;
  long min_part;

  bool feasible(long slots, const Cursor& c) const {
    if (slots == 0) return c.sum_left == 0;
    return c.sum_left >= slots * min_part;
  }

  static Cursor step(const Cursor& c, int v) { return {c.sum_left - v, 0, false}; }

  std::optional<int> smallest(std::size_t pos, const Cursor& c, int after) const {
    const long slots_after = length - static_cast<long>(pos) - 1;
    for (long v = std::max<long>(after + 1, min_part); v <= c.sum_left; ++v) {
      if (feasible(slots_after, step(c, static_cast<int>(v)))) return static_cast<int>(v);
    }
    return std::nullopt;
  }
};

/// Fills positions [from, size) with the lexicographically least feasible
/// completion. cursors[from] must already be set and feasible.
template <class Rules>
bool fill_least(const Rules& rules, std::vector<int>& entries, std::vector<Cursor>& cursors,
                std::size_t from) {
  for (std::size_t i = from; i < entries.size(); ++i) {
    const auto v = rules.smallest(i, cursors[i], -1);
    if (!v) return false;
    entries[i] = *v;
    cursors[i + 1] = rules.step(cursors[i], *v);
  }
  return true;
}

/// Lexicographic successor; false when `entries` is the last tuple.
template <class Rules>
bool lex_successor(const Rules& rules, std::vector<int>& entries, std::vector<Cursor>& cursors) {
  for (std::size_t i = entries.size(); i-- > 0;) {
    const auto v = rules.smallest(i, cursors[i], entries[i]);
    if (!v) continue;
    entries[i] = *v;
    cursors[i + 1] = rules.step(cursors[i], *v);
    return fill_least(rules, entries, cursors, i + 1);
  }
  return false;
}

}  // namespace

KTuple::KTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    content_ += e;
    if (e > 0) ++support_;
  }
}

JTuple::JTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    sum_ += e;
    if (e >= 2) ++big_count_;
  }
}

// ---------------------------------------------------------------------------

KTupleGenerator::KTupleGenerator(long p, long ell)
    : p_(p), ell_(ell), support_(ell == 0 ? 0 : 1) {
  require_coefficient_range(p, ell);
}

// Sets up the first tuple of the block with the current support, skipping
// supports whose length cannot hold that many separated positive entries.
bool KTupleGenerator::start_length() {
  for (; support_ <= ell_; ++support_) {
    length_ = p_ - 1 - ell_ + support_;
    const KRules rules{length_};
    const Cursor start{ell_, support_, false};
    if (!KRules::feasible(length_, start)) continue;
    entries_.assign(static_cast<std::size_t>(length_), 0);
    cursors_.assign(static_cast<std::size_t>(length_) + 1, Cursor{});
    cursors_[0] = start;
    if (fill_least(rules, entries_, cursors_, 0)) return true;
  }
  return false;
}

bool KTupleGenerator::advance() {
  if (done_) return false;
  bool ok;
  if (!started_) {
    started_ = true;
    ok = start_length();
  } else {
    ok = lex_successor(KRules{length_}, entries_, cursors_);
    if (!ok) {
      ++support_;
      ok = start_length();
    }
  }
  if (!ok) {
    done_ = true;
    return false;
  }
  current_ = KTuple(entries_);
  return true;
}

// ---------------------------------------------------------------------------

JTupleGenerator::JTupleGenerator(long p, long ell) : p_(p), ell_(ell), bigs_(ell == 0 ? 0 : 1) {
  require_coefficient_range(p, ell);
}

bool JTupleGenerator::start_length() {
  for (; bigs_ <= ell_; ++bigs_) {
    length_ = p_ + bigs_ - ell_ - 1;
    const JRules rules{length_};
    const Cursor start{ell_ + length_, bigs_, false};
    if (!JRules::feasible(length_, start)) continue;
    entries_.assign(static_cast<std::size_t>(length_), 1);
    cursors_.assign(static_cast<std::size_t>(length_) + 1, Cursor{});
    cursors_[0] = start;
    if (fill_least(rules, entries_, cursors_, 0)) return true;
  }
  return false;
}

bool JTupleGenerator::advance() {
  if (done_) return false;
  bool ok;
  if (!started_) {
    started_ = true;
    ok = start_length();
  } else {
    ok = lex_successor(JRules{length_}, entries_, cursors_);
    if (!ok) {
      ++bigs_;
      ok = start_length();
    }
  }
  if (!ok) {
    done_ = true;
    return false;
  }
  current_ = JTuple(entries_);
  return true;
}

// ---------------------------------------------------------------------------

CompositionGenerator::CompositionGenerator(long total, long parts, long min_part)
    : min_part_(min_part) {
  if (parts < 1 || min_part < 1) {
    throw DomainError("compositions require parts >= 1 and min_part >= 1");
  }
  entries_.assign(static_cast<std::size_t>(parts), 0);
  cursors_.assign(static_cast<std::size_t>(parts) + 1, Cursor{});
  cursors_[0] = Cursor{total, 0, false};
  current_.total = total;
  if (total < parts * min_part) done_ = true;
}

bool CompositionGenerator::advance() {
  if (done_) return false;
  const CompositionRules rules{static_cast<long>(entries_.size()), min_part_};
  bool ok;
  if (!started_) {
    started_ = true;
    ok = fill_least(rules, entries_, cursors_, 0);
  } else {
    ok = lex_successor(rules, entries_, cursors_);
  }
  if (!ok) {
    done_ = true;
    return false;
  }
  current_.parts = entries_;
  return true;
}

}  // namespace figurate
