#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grot {

// An abstract supercuspidal line {nu^a rho} of GL_p(F), optionally carrying
// the torsion number s of the attached line of cuspidals of the inner form.
struct CuspidalFamily {
  std::string name;
  int p = 1;
  std::optional<int> s;

  bool operator==(const CuspidalFamily&) const = default;
};

// The inner-form degree d (D has dimension d^2 over F) and the declared
// cuspidal families. Families are stored sorted by name; a family id is the
// index into that order, so id order coincides with name order.
class AlgebraContext {
 public:
  AlgebraContext(int d, std::vector<CuspidalFamily> families);

  int d() const noexcept { return d_; }
  const std::vector<CuspidalFamily>& families() const noexcept { return families_; }

  const CuspidalFamily& family(int id) const;
  int family_id(std::string_view name) const;
  std::optional<int> find_family(std::string_view name) const;

  // Degree over D of one cuspidal on the D-side line: t = p*s/d.
  int d_unit_degree(int id) const;

  bool operator==(const AlgebraContext&) const = default;

 private:
  int d_;
  std::vector<CuspidalFamily> families_;
};

}  // namespace grot
