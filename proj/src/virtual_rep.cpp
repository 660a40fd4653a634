#include "grot/virtual_rep.hpp"

#include "grot/error.hpp"

namespace grot {

const char* to_string(Basis basis) noexcept {
  return basis == Basis::Standard ? "Standard" : "Irreducible";
}

Coefficient VirtualRep::coefficient(const Multisegment& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualRep::add_term(const Multisegment& key, Coefficient c) {
  if (key.side() != side_) throw DomainError("term side does not match the element's side");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> VirtualRep::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [key, c] : terms_) {
    if (deg && *deg != key.degree()) return std::nullopt;
    deg = key.degree();
  }
  return deg;
}

std::map<int, VirtualRep> VirtualRep::graded_slices() const {
  std::map<int, VirtualRep> out;
  for (const auto& [key, c] : terms_)
    out.try_emplace(key.degree(), side_, basis_).first->second.add_term(key, c);
  return out;
}

void VirtualRep::require_compatible(const VirtualRep& other) const {
  if (side_ != other.side_) throw DomainError("cannot combine elements of R(F) and R(D)");
  if (basis_ != other.basis_)
    throw DomainError("cannot combine Standard-basis and Irreducible-basis elements");
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

VirtualRep& VirtualRep::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

VirtualRep standard(const Multisegment& ms) {
  VirtualRep x(ms.side(), Basis::Standard);
  x.add_term(ms, 1);
  return x;
}

VirtualRep irreducible(const Multisegment& ms) {
  VirtualRep x(ms.side(), Basis::Irreducible);
  x.add_term(ms, 1);
  return x;
}

VirtualRep unit(Side side) { return standard(Multisegment(side)); }

Coefficient TensorRep::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void TensorRep::add_term(const Key& key, Coefficient c) {
  if (key.size() != arity_) throw DomainError("tensor key has the wrong number of slots");
  for (const auto& ms : key)
    if (ms.side() != side_) throw DomainError("tensor slot side does not match");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorRep& TensorRep::operator+=(const TensorRep& other) {
  if (other.arity_ != arity_ || other.side_ != side_ || other.basis_ != basis_)
    throw DomainError("incompatible tensor elements");
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

TensorRep& TensorRep::operator-=(const TensorRep& other) {
  if (other.arity_ != arity_ || other.side_ != side_ || other.basis_ != basis_)
    throw DomainError("incompatible tensor elements");
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

namespace {

std::string atom(Basis basis, const Multisegment& ms, const AlgebraContext& ctx) {
  return std::string(basis == Basis::Standard ? "Std(" : "Irr(") + format(ms, ctx) + ")";
}

template <typename Terms, typename Body>
std::string join_terms(const Terms& terms, Body&& body) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Coefficient mag = c;
    if (first) {
      if (c < 0) {
        out += '-';
        mag = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) mag = -c;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += body(key);
    first = false;
  }
  return out;
}

}  // namespace

std::string format(const VirtualRep& x, const AlgebraContext& ctx) {
  return join_terms(x.terms(), [&](const Multisegment& ms) { return atom(x.basis(), ms, ctx); });
}

std::string format(const TensorRep& x, const AlgebraContext& ctx) {
  return join_terms(x.terms(), [&](const TensorRep::Key& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out += " (x) ";
      out += atom(x.basis(), key[i], ctx);
    }
    return out;
  });
}

}  // namespace grot
