#include "lawmeas/setcore.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace lawmeas {

namespace {

int words_for(int bits) { return (bits + 63) / 64; }

}  // namespace

Carrier::Carrier() : data_(std::make_shared<Data>()) {}

Carrier::Carrier(std::vector<std::string> labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw InputError("duplicate carrier label '" + l + "'");
    }
  }
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Carrier Carrier::numeric(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Carrier(std::move(labels));
}

std::optional<int> Carrier::index_of(std::string_view label) const {
  const auto& labels = data_->labels;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

SubsetMask::SubsetMask(Carrier carrier)
    : carrier_(std::move(carrier)), words_(words_for(carrier_.size()), 0) {}

SubsetMask SubsetMask::full(const Carrier& c) {
  SubsetMask m(c);
  const int n = c.size();
  for (int w = 0; w < static_cast<int>(m.words_.size()); ++w) {
    const int lo = w * 64;
    const int hi = std::min(n - lo, 64);
    m.words_[w] = hi == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << hi) - 1);
  }
  return m;
}

SubsetMask SubsetMask::of(const Carrier& c, std::initializer_list<int> elems) {
  SubsetMask m(c);
  for (int e : elems) m.set(e);
  return m;
}

SubsetMask SubsetMask::single(const Carrier& c, int elem) {
  SubsetMask m(c);
  m.set(elem);
  return m;
}

int SubsetMask::count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool SubsetMask::is_empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int i = 0; i < carrier_.size(); ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

int SubsetMask::min_element() const {
  for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
    if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
  }
  return -1;
}

void SubsetMask::check_same_carrier(const SubsetMask& o) const {
  if (!(carrier_ == o.carrier_)) {
    throw CarrierMismatch("subset operation across different carriers");
  }
}

SubsetMask SubsetMask::operator|(const SubsetMask& o) const {
  check_same_carrier(o);
  SubsetMask r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= o.words_[w];
  return r;
}

SubsetMask SubsetMask::operator&(const SubsetMask& o) const {
  check_same_carrier(o);
  SubsetMask r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
  return r;
}

SubsetMask SubsetMask::operator-(const SubsetMask& o) const {
  check_same_carrier(o);
  SubsetMask r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
  return r;
}

bool SubsetMask::subset_of(const SubsetMask& o) const {
  check_same_carrier(o);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~o.words_[w]) return false;
  }
  return true;
}

bool SubsetMask::intersects(const SubsetMask& o) const {
  check_same_carrier(o);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & o.words_[w]) return true;
  }
  return false;
}

std::strong_ordering SubsetMask::operator<=>(const SubsetMask& o) const {
  if (words_.size() != o.words_.size()) {
    throw CarrierMismatch("subset comparison across different carriers");
  }
  // Numeric value order: most significant word decides.
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != o.words_[w]) {
      return words_[w] < o.words_[w] ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t SubsetMask::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < carrier_.size(); ++i) {
    if (!test(i)) continue;
    if (!first) out += ",";
    out += carrier_.label(i);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<std::string> SubsetMask::element_labels() const {
  std::vector<std::string> out;
  for (int i : elements()) out.push_back(carrier_.label(i));
  return out;
}

void canonicalize_family(SetFamily& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool family_contains(const SetFamily& sorted_family, const SubsetMask& m) {
  return std::binary_search(sorted_family.begin(), sorted_family.end(), m);
}

FiniteFunction FiniteFunction::identity(const Carrier& c) {
  FiniteFunction f{c, c, {}};
  f.table.resize(c.size());
  for (int i = 0; i < c.size(); ++i) f.table[i] = i;
  return f;
}

FiniteFunction FiniteFunction::constant(const Carrier& dom, const Carrier& cod,
                                        int value) {
  if (value < 0 || value >= cod.size()) {
    throw InputError("constant value out of codomain range");
  }
  FiniteFunction f{dom, cod, std::vector<std::int32_t>(dom.size(), value)};
  return f;
}

FiniteFunction FiniteFunction::from_rank(const Carrier& dom, const Carrier& cod,
                                         std::uint64_t rank) {
  const int n = dom.size();
  const auto k = static_cast<std::uint64_t>(cod.size());
  FiniteFunction f{dom, cod, std::vector<std::int32_t>(n, 0)};
  for (int i = n - 1; i >= 0; --i) {
    f.table[i] = static_cast<std::int32_t>(rank % k);
    rank /= k;
  }
  return f;
}

void validate_function(const FiniteFunction& f) {
  if (static_cast<int>(f.table.size()) != f.domain.size()) {
    throw InputError("function table length does not match domain size");
  }
  for (auto v : f.table) {
    if (v < 0 || v >= f.codomain.size()) {
      throw InputError("function table entry out of codomain range");
    }
  }
}

FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f) {
  if (!(f.codomain == g.domain)) {
    throw CarrierMismatch("compose: codomain of inner differs from domain of outer");
  }
  FiniteFunction h{f.domain, g.codomain, {}};
  h.table.reserve(f.table.size());
  for (auto v : f.table) h.table.push_back(g.table[v]);
  return h;
}

SubsetMask preimage(const FiniteFunction& f, const SubsetMask& b) {
  if (!(b.carrier() == f.codomain)) {
    throw CarrierMismatch("preimage: subset is not over the function's codomain");
  }
  SubsetMask r(f.domain);
  for (int x = 0; x < f.domain.size(); ++x) {
    if (b.test(f.table[x])) r.set(x);
  }
  return r;
}

SubsetMask complement(const SubsetMask& s) {
  return SubsetMask::full(s.carrier()) - s;
}

Partition Partition::one_block(const Carrier& c) {
  Partition p{c, {}};
  if (c.size() > 0) p.blocks.push_back(SubsetMask::full(c));
  return p;
}

int Partition::block_of(int elem) const {
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (blocks[b].test(elem)) return b;
  }
  return -1;
}

void validate_partition(const Partition& p) {
  SubsetMask seen(p.carrier);
  int last_min = -1;
  for (const auto& block : p.blocks) {
    if (!(block.carrier() == p.carrier)) {
      throw CarrierMismatch("partition block over a different carrier");
    }
    if (block.is_empty()) throw InputError("partition contains an empty block");
    if (seen.intersects(block)) throw InputError("partition blocks overlap");
    const int m = block.min_element();
    if (m <= last_min) throw InputError("partition blocks out of canonical order");
    last_min = m;
    seen = seen | block;
  }
  if (!seen.is_full()) throw InputError("partition blocks do not cover the carrier");
}

void refine_partition(Partition& p, const SubsetMask& cut) {
  std::vector<SubsetMask> next;
  next.reserve(p.blocks.size() * 2);
  for (const auto& block : p.blocks) {
    SubsetMask inside = block & cut;
    SubsetMask outside = block - cut;
    if (!inside.is_empty()) next.push_back(std::move(inside));
    if (!outside.is_empty()) next.push_back(std::move(outside));
  }
  std::sort(next.begin(), next.end(), [](const SubsetMask& a, const SubsetMask& b) {
    return a.min_element() < b.min_element();
  });
  p.blocks = std::move(next);
}

std::vector<Partition> all_partitions(const Carrier& c, const Caps& caps) {
  const int n = c.size();
  if (n > caps.partition_max_carrier) {
    throw CapExceeded("all_partitions: carrier size " + std::to_string(n) +
                      " exceeds cap " + std::to_string(caps.partition_max_carrier));
  }
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{c, {}});
    return out;
  }

  // Restricted-growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  // Lexicographic enumeration; block j collects elements with a[i] == j,
  // which orders blocks by smallest contained element automatically.
  std::vector<int> a(n, 0);
  std::vector<int> maxval(n, 0);  // maxval[i] = max(a[0..i-1]); maxval[0] = 0
  auto emit = [&] {
    int block_count = 0;
    for (int i = 0; i < n; ++i) block_count = std::max(block_count, a[i] + 1);
    Partition p{c, std::vector<SubsetMask>(block_count, SubsetMask(c))};
    for (int i = 0; i < n; ++i) p.blocks[a[i]].set(i);
    out.push_back(std::move(p));
  };

  while (true) {
    emit();
    int i = n - 1;
    while (i > 0 && a[i] == maxval[i] + 1) {
      a[i] = 0;
      --i;
    }
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
    for (int j = i + 1; j < n; ++j) {
      maxval[j] = std::max(maxval[j - 1], a[j - 1]);
    }
  }
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) noexcept {
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > INT64_MAX / base) return INT64_MAX;
    result *= base;
  }
  return result;
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw InputError("bell_number: n out of range");
  // Bell triangle: row r starts with the last entry of row r-1; each entry
  // adds its left neighbor and the entry above the left neighbor.
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next;
    next.reserve(r + 1);
    next.push_back(row.back());
    for (std::size_t i = 0; i < row.size(); ++i) {
      next.push_back(next.back() + row[i]);
    }
    row = std::move(next);
  }
  return row.front();
}

}  // namespace lawmeas
