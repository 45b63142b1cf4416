#include "holo/angleform.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "holo/errors.hpp"

namespace holo {

bool assignment_valid(const Assignment& asg, int n) {
  if (n < 1) return false;
  double target = kTau / (2.0 * n);
  return std::abs(asg.a + asg.b + asg.c - target) <= 1e-12 * target;
}

AngleForm::AngleForm(Rational ca, Rational cb, Rational cc, Rational ct)
    : co_{std::move(ca), std::move(cb), std::move(cc), std::move(ct)} {}

AngleForm make_form(Rational ca, Rational cb, Rational cc, Rational ct) {
  return AngleForm(std::move(ca), std::move(cb), std::move(cc), std::move(ct));
}

AngleForm AngleForm::operator+(const AngleForm& o) const {
  return AngleForm(co_[0] + o.co_[0], co_[1] + o.co_[1], co_[2] + o.co_[2], co_[3] + o.co_[3]);
}

AngleForm AngleForm::operator-(const AngleForm& o) const {
  return AngleForm(co_[0] - o.co_[0], co_[1] - o.co_[1], co_[2] - o.co_[2], co_[3] - o.co_[3]);
}

AngleForm AngleForm::operator-() const { return AngleForm(-co_[0], -co_[1], -co_[2], -co_[3]); }

AngleForm AngleForm::scaled(const Rational& k) const {
  return AngleForm(co_[0] * k, co_[1] * k, co_[2] * k, co_[3] * k);
}

AngleForm AngleForm::prime(int n) const {
  AngleForm r = *this;
  r.co_[3] = r.co_[3] + Rational(1, 2LL * n);
  return r;
}

AngleForm AngleForm::reduced(int n) const {
  // Substitute c = tau/(2n) - a - b.
  const Rational& r = co_[2];
  return AngleForm(co_[0] - r, co_[1] - r, Rational(0), co_[3] + r * Rational(1, 2LL * n));
}

bool AngleForm::equivalent(const AngleForm& o, int n) const { return reduced(n) == o.reduced(n); }

AngleForm AngleForm::cycled() const { return AngleForm(co_[2], co_[0], co_[1], co_[3]); }

double AngleForm::eval_unchecked(const Assignment& asg) const {
  return co_[0].to_double() * asg.a + co_[1].to_double() * asg.b + co_[2].to_double() * asg.c +
         co_[3].to_double() * kTau;
}

double AngleForm::eval(const Assignment& asg, int n) const {
  if (!assignment_valid(asg, n)) {
    throw ConstraintViolation("assignment does not satisfy a+b+c = tau/" + std::to_string(2 * n));
  }
  return eval_unchecked(asg);
}

bool AngleForm::operator<(const AngleForm& o) const {
  for (int i = 0; i < 4; ++i) {
    if (co_[i] != o.co_[i]) return co_[i] < o.co_[i];
  }
  return false;
}

std::string AngleForm::to_string() const {
  static const char* names[4] = {"a", "b", "c", "tau"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (co_[i].is_zero()) continue;
    Rational k = co_[i];
    bool neg = k.is_negative();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = neg ? -k : k;
    if (mag == Rational(1)) {
      out += names[i];
    } else {
      out += mag.to_string();
      out += "*";
      out += names[i];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

struct Term {
  int var = -1;  // 0..3, -1 for pure "0"
  Rational coeff;
};

Rational parse_rational(const std::string& s, const std::string& context) {
  try {
    return Rational::from_string(s);
  } catch (const std::exception&) {
    throw ParseError("bad coefficient '" + s + "' in term: " + context);
  }
}

// One term: [coef][*] var [/div]  or a bare coefficient "0".
Term parse_term(std::string_view t) {
  std::string s;
  for (char ch : t) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty term in angle form");
  Term term;
  term.coeff = Rational(1);

  size_t var_pos = std::string::npos;
  int var = -1;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "tau") == 0) {
      var_pos = i;
      var = 3;
      break;
    }
    if ((s[i] == 'a' || s[i] == 'b' || s[i] == 'c')) {
      var_pos = i;
      var = s[i] - 'a';
      break;
    }
  }
  if (var < 0) {
    // A pure numeric term is only allowed when it is zero.
    Rational v = parse_rational(s, std::string(t));
    if (!v.is_zero()) throw ParseError("constant term without variable: " + std::string(t));
    term.var = -1;
    term.coeff = v;
    return term;
  }
  term.var = var;
  std::string pre = s.substr(0, var_pos);
  std::string post = s.substr(var_pos + (var == 3 ? 3 : 1));
  if (!pre.empty()) {
    if (pre.back() == '*') pre.pop_back();
    if (pre == "-")
      term.coeff = Rational(-1);
    else if (pre == "+" || pre.empty())
      term.coeff = Rational(1);
    else
      term.coeff = parse_rational(pre, std::string(t));
  }
  if (!post.empty()) {
    if (post[0] != '/') throw ParseError("unexpected text after variable: " + std::string(t));
    Rational div = parse_rational(post.substr(1), std::string(t));
    if (div.is_zero()) throw ParseError("division by zero in term: " + std::string(t));
    term.coeff = term.coeff / div;
  }
  return term;
}

}  // namespace

AngleForm AngleForm::parse(std::string_view text) {
  // Split into signed terms on top-level + and -.
  std::array<Rational, 4> co{Rational(0), Rational(0), Rational(0), Rational(0)};
  std::string cur;
  std::vector<std::pair<int, std::string>> terms;  // sign, body
  int sign = 1;
  bool any = false;
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  for (; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '+' || text[i] == '-') {
      if (cur.find_first_not_of(" \t") == std::string::npos) {
        if (i < text.size()) throw ParseError("empty term in angle form: " + std::string(text));
        if (!any) throw ParseError("empty angle form");
      } else {
        terms.emplace_back(sign, cur);
        any = true;
      }
      cur.clear();
      if (i < text.size()) sign = text[i] == '-' ? -1 : 1;
    } else {
      cur.push_back(text[i]);
    }
  }
  for (auto& [sg, body] : terms) {
    Term t = parse_term(body);
    if (t.var >= 0) {
      Rational add = sg < 0 ? -t.coeff : t.coeff;
      co[t.var] = co[t.var] + add;
    }
  }
  return AngleForm(co[0], co[1], co[2], co[3]);
}

bool Shape::same_class(const Shape& o, int n) const {
  for (int rot = 0; rot < 3; ++rot) {
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      if (!angles[i].equivalent(o.angles[(i + rot) % 3], n)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Shape Shape::cycled_labels() const {
  return Shape(angles[0].cycled(), angles[1].cycled(), angles[2].cycled());
}

std::string Shape::class_key(int n) const {
  std::array<std::string, 3> reps;
  for (int i = 0; i < 3; ++i) reps[i] = angles[i].reduced(n).to_string();
  // Lexicographically minimal cyclic rotation.
  std::string best;
  for (int rot = 0; rot < 3; ++rot) {
    std::string cand = reps[rot] + " | " + reps[(rot + 1) % 3] + " | " + reps[(rot + 2) % 3];
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

bool shape_sum_check(const Shape& shape, int n) {
  AngleForm sum = shape.angles[0] + shape.angles[1] + shape.angles[2];
  return sum.equivalent(AngleForm::tau_times(Rational(1, 2)), n);
}

std::array<double, 3> eval_shape(const Shape& shape, const Assignment& asg, int n) {
  std::array<double, 3> vals{};
  for (int i = 0; i < 3; ++i) {
    vals[i] = shape.angles[i].eval(asg, n);
    if (vals[i] <= 1e-12 || vals[i] >= kTau / 2 - 1e-12) {
      throw UnrealizableShape("angle " + shape.angles[i].to_string() + " evaluates to " +
                              std::to_string(vals[i]) + " rad, outside (0, tau/2)");
    }
  }
  return vals;
}

}  // namespace holo
