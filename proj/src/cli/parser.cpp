#include "grot/cli/parser.hpp"

#include <cctype>
#include <limits>

#include "grot/error.hpp"

namespace grot::cli {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const AlgebraContext& ctx) : text_(text), ctx_(ctx) {}

  VirtualRep parse(ParseDefaults defaults) {
    skip_ws();
    if (rest_is_zero()) return VirtualRep(defaults.side, defaults.basis);

    bool negate = accept('-');
    parse_term(negate ? -1 : 1);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (accept('+')) {
        parse_term(1);
      } else if (accept('-')) {
        parse_term(-1);
      } else {
        fail("expected '+', '-' or end of input");
      }
    }

    const Side side = side_.value_or(defaults.side);
    const Basis basis = basis_.value_or(defaults.basis);
    VirtualRep out(side, basis);
    for (auto& t : terms_) out.add_term(Multisegment(side, std::move(t.segments)), t.coefficient);
    return out;
  }

 private:
  struct Term {
    Coefficient coefficient;
    std::vector<Segment> segments;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  bool rest_is_zero() const {
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != '0') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }

  long long parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail("expected an integer");
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer out of range");
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a family name");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(Coefficient sign) {
    skip_ws();
    Coefficient coefficient = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_int();
      expect('*');
    }
    skip_ws();
    const std::size_t atom_pos = pos_;
    Basis basis;
    if (accept("Std")) {
      basis = Basis::Standard;
    } else if (accept("Irr")) {
      basis = Basis::Irreducible;
    } else {
      fail("expected 'Std(' or 'Irr('");
    }
    if (basis_ && *basis_ != basis) throw ParseError(atom_pos, "cannot mix Std and Irr terms");
    basis_ = basis;
    expect('(');
    Term term{sign * coefficient, {}};
    if (!accept(')')) {
      do {
        term.segments.push_back(parse_segment());
      } while (accept(','));
      expect(')');
    }
    terms_.push_back(std::move(term));
  }

  Segment parse_segment() {
    skip_ws();
    const std::size_t seg_pos = pos_;
    const std::string name = parse_ident();
    const auto family = ctx_.find_family(name);
    if (!family) throw ParseError(seg_pos, "unknown family '" + name + "'");
    Side side;
    int start, length;
    if (accept('[')) {
      side = Side::F;
      start = static_cast<int>(parse_int());
      if (!accept("..")) fail("expected '..'");
      const int end = static_cast<int>(parse_int());
      expect(']');
      if (end < start) throw ParseError(seg_pos, "segment end precedes its start");
      length = end - start + 1;
    } else if (accept('\'')) {
      side = Side::D;
      expect('{');
      start = static_cast<int>(parse_int());
      expect(';');
      length = static_cast<int>(parse_int());
      expect('}');
      if (length < 1) throw ParseError(seg_pos, "segment length must be positive");
    } else {
      fail("expected '[' or \"'\" after the family name");
    }
    if (side_ && *side_ != side) throw ParseError(seg_pos, "cannot mix F-side and D-side segments");
    side_ = side;
    try {
      return make_segment(ctx_, *family, side, start, length);
    } catch (const DomainError& e) {
      throw ParseError(seg_pos, e.what());
    }
  }

  std::string_view text_;
  const AlgebraContext& ctx_;
  std::size_t pos_ = 0;
  std::optional<Side> side_;
  std::optional<Basis> basis_;
  std::vector<Term> terms_;
};

}  // namespace

VirtualRep parse_expr(std::string_view text, const AlgebraContext& ctx, ParseDefaults defaults) {
  return ExprParser(text, ctx).parse(defaults);
}

}  // namespace grot::cli
