#ifndef LAWMEAS_SETCORE_HPP
#define LAWMEAS_SETCORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lawmeas/caps.hpp"
#include "lawmeas/errors.hpp"

namespace lawmeas {

// A finite carrier set: an ordered list of distinct element names.
// Element i is labels()[i]. Immutable and cheap to copy (shared state).
class Carrier {
 public:
  Carrier();  // the empty carrier
  explicit Carrier(std::vector<std::string> labels);

  // Carrier with labels "0", "1", ..., "n-1".
  static Carrier numeric(int n);

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::string& label(int i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<int> index_of(std::string_view label) const;

  // Value equality: same label list. Shared-state copies compare fast.
  bool operator==(const Carrier& other) const {
    return data_ == other.data_ || data_->labels == other.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

// A subset of a carrier as a bit-vector. Bit i = element i is in the set.
// Masks over the same carrier order and compare by their numeric bit value
// (bit 0 least significant), which is the canonical family order everywhere
// in this project.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(Carrier carrier);  // the empty subset

  static SubsetMask empty(const Carrier& c) { return SubsetMask(c); }
  static SubsetMask full(const Carrier& c);
  static SubsetMask of(const Carrier& c, std::initializer_list<int> elems);
  static SubsetMask single(const Carrier& c, int elem);

  const Carrier& carrier() const { return carrier_; }
  int bit_length() const { return carrier_.size(); }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const;
  bool is_empty() const;
  bool is_full() const { return count() == carrier_.size(); }
  std::vector<int> elements() const;
  // First set bit, or -1 when empty.
  int min_element() const;

  SubsetMask operator|(const SubsetMask& o) const;
  SubsetMask operator&(const SubsetMask& o) const;
  // Set difference: *this minus o.
  SubsetMask operator-(const SubsetMask& o) const;
  bool subset_of(const SubsetMask& o) const;
  bool intersects(const SubsetMask& o) const;

  bool operator==(const SubsetMask& o) const { return words_ == o.words_; }
  std::strong_ordering operator<=>(const SubsetMask& o) const;

  std::size_t hash() const;

  // "{a,c}" using carrier labels, for reports.
  std::string to_string() const;
  std::vector<std::string> element_labels() const;

 private:
  void check_same_carrier(const SubsetMask& o) const;

  Carrier carrier_;
  std::vector<std::uint64_t> words_;
};

using SetFamily = std::vector<SubsetMask>;

// Sorts by numeric value and drops duplicates: the canonical form under
// which family equality is plain list equality.
void canonicalize_family(SetFamily& family);
bool family_contains(const SetFamily& sorted_family, const SubsetMask& m);

// A total function between finite carriers, as a value table:
// table[i] is the codomain index of the image of domain element i.
struct FiniteFunction {
  Carrier domain;
  Carrier codomain;
  std::vector<std::int32_t> table;

  int operator()(int x) const { return table[x]; }

  static FiniteFunction identity(const Carrier& c);
  static FiniteFunction constant(const Carrier& dom, const Carrier& cod, int value);
  // The function whose table is the base-|cod| digits of `rank`, most
  // significant digit first; rank order equals lexicographic table order.
  static FiniteFunction from_rank(const Carrier& dom, const Carrier& cod,
                                  std::uint64_t rank);

  bool operator==(const FiniteFunction& o) const {
    return domain == o.domain && codomain == o.codomain && table == o.table;
  }
};

// Validates totality (every table entry a valid codomain index).
void validate_function(const FiniteFunction& f);

// g after f; f.codomain must equal g.domain.
FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f);

// { x | f(x) in b }. b must range over f's codomain.
SubsetMask preimage(const FiniteFunction& f, const SubsetMask& b);

SubsetMask complement(const SubsetMask& s);

// Disjoint nonempty blocks covering the carrier, ordered by smallest
// contained element (the canonical order produced by restricted-growth
// enumeration).
struct Partition {
  Carrier carrier;
  std::vector<SubsetMask> blocks;

  static Partition one_block(const Carrier& c);  // no blocks when c is empty
  int block_of(int elem) const;                  // -1 if not found (invalid partition)

  bool operator==(const Partition& o) const {
    return carrier == o.carrier && blocks == o.blocks;
  }
};

// Checks the Partition invariants; throws InputError on violation.
void validate_partition(const Partition& p);

// Splits every block along `cut` into (block & cut) and (block - cut),
// dropping empty pieces; canonical block order is preserved by re-sorting
// on smallest contained element.
void refine_partition(Partition& p, const SubsetMask& cut);

// All set partitions of c via restricted-growth strings, in lexicographic
// RGS order; count is Bell(c.size()). Throws CapExceeded beyond the cap.
std::vector<Partition> all_partitions(const Carrier& c,
                                      const Caps& caps = global_caps());

// Bell numbers by the Bell-triangle recurrence (n <= 25).
std::uint64_t bell_number(int n);

// base^exp, saturating at INT64_MAX instead of overflowing.
std::int64_t checked_pow(std::int64_t base, int exp) noexcept;

}  // namespace lawmeas

#endif
