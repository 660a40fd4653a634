#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "grot/multisegment.hpp"

namespace grot {

// One elementary operation: segments i < j of the source (canonical
// positions) are linked and get replaced by their union and intersection.
struct ElementaryOp {
  std::size_t first_index;
  std::size_t second_index;
  Segment first;
  Segment second;
  Multisegment result;
};

std::vector<ElementaryOp> elementary_ops(const Multisegment& ms);

struct CertificateStep {
  Segment first;
  Segment second;
  Multisegment result;
};

// A descent from the larger multisegment to the smaller one.
struct OrderCertificate {
  std::vector<CertificateStep> chain;
};

struct OrderResult {
  bool holds = false;
  std::optional<OrderCertificate> certificate;
};

// a <= b: a is reachable from b by finitely many elementary operations.
// Breadth-first, so the returned chain has minimal length. Throws DomainError
// when the sides differ.
OrderResult leq(const Multisegment& a, const Multisegment& b);

// True iff every step applies an elementary operation to the previous
// multisegment, starting at `source`, and the chain ends at `target`.
bool replay(const OrderCertificate& cert, const Multisegment& source, const Multisegment& target);

std::set<Multisegment> down_set(const Multisegment& ms);

// The down-set of `top` in a linear extension (smaller elements first) with
// its order relation.
class DownSetPoset {
 public:
  explicit DownSetPoset(const Multisegment& top);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Multisegment>& elements() const noexcept { return elements_; }
  const Multisegment& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Multisegment& ms) const;
  bool leq(std::size_t i, std::size_t j) const { return below_[i][j] != 0; }

 private:
  std::vector<Multisegment> elements_;
  std::map<Multisegment, std::size_t> index_;
  std::vector<std::vector<char>> below_;
};

}  // namespace grot
