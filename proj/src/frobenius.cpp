#include "arcring/frobenius.hpp"

#include <sstream>
#include <stdexcept>

namespace arcring {

char label_char(Label l) { return l == Label::X ? 'X' : '1'; }

std::string word_to_string(const LabelWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Label l : w) s.push_back(label_char(l));
  return s;
}

LabelWord word_from_string(const std::string& s) {
  LabelWord w;
  w.reserve(s.size());
  for (char c : s) {
    if (c == '1')
      w.push_back(Label::One);
    else if (c == 'X')
      w.push_back(Label::X);
    else
      throw std::invalid_argument("label word: expected '1' or 'X'");
  }
  return w;
}

TensorElement TensorElement::basis(LabelWord word, long long coeff) {
  TensorElement t(static_cast<int>(word.size()));
  t.add(word, coeff);
  return t;
}

TensorElement TensorElement::scalar(long long value) {
  TensorElement t(0);
  t.add({}, value);
  return t;
}

long long TensorElement::coefficient(const LabelWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void TensorElement::add(const LabelWord& word, long long coeff) {
  if (static_cast<int>(word.size()) != arity_)
    throw std::invalid_argument("TensorElement: word length differs from arity");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (other.arity_ != arity_)
    throw std::invalid_argument("TensorElement: arity mismatch");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

TensorElement operator*(long long c, const TensorElement& x) {
  TensorElement out(x.arity());
  for (const auto& [w, v] : x.terms()) out.add(w, c * v);
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const long long mag = c < 0 ? -c : c;
    if (mag != 1 || w.empty()) os << mag;
    if (!w.empty()) os << word_to_string(w);
  }
  return os.str();
}

TensorElement merge(Label x, Label y) {
  TensorElement out(1);
  if (x == Label::One) out.add({y}, 1);
  else if (y == Label::One) out.add({x}, 1);
  return out;
}

TensorElement split(Label x) {
  TensorElement out(2);
  if (x == Label::One) {
    out.add({Label::One, Label::X}, 1);
    out.add({Label::X, Label::One}, 1);
  } else {
    out.add({Label::X, Label::X}, 1);
  }
  return out;
}

int trace(Label x) { return x == Label::X ? 1 : 0; }

long long trace(const TensorElement& x) {
  if (x.arity() != 1) throw std::invalid_argument("trace: arity must be 1");
  long long sum = 0;
  for (const auto& [w, c] : x.terms()) sum += c * trace(w[0]);
  return sum;
}

TensorElement tensor(const TensorElement& x, const TensorElement& y) {
  TensorElement out(x.arity() + y.arity());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      LabelWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add(w, cx * cy);
    }
  }
  return out;
}

TensorElement merge_at(const TensorElement& x, int pos) {
  if (pos < 0 || pos + 1 >= x.arity())
    throw std::out_of_range("merge_at: position out of range");
  TensorElement out(x.arity() - 1);
  for (const auto& [w, c] : x.terms()) {
    const auto merged = merge(w[pos], w[pos + 1]);
    for (const auto& [m, mc] : merged.terms()) {
      LabelWord next(w.begin(), w.begin() + pos);
      next.push_back(m[0]);
      next.insert(next.end(), w.begin() + pos + 2, w.end());
      out.add(next, c * mc);
    }
  }
  return out;
}

TensorElement split_at(const TensorElement& x, int pos) {
  if (pos < 0 || pos >= x.arity())
    throw std::out_of_range("split_at: position out of range");
  TensorElement out(x.arity() + 1);
  for (const auto& [w, c] : x.terms()) {
    const auto pieces = split(w[pos]);
    for (const auto& [s, sc] : pieces.terms()) {
      LabelWord next(w.begin(), w.begin() + pos);
      next.push_back(s[0]);
      next.push_back(s[1]);
      next.insert(next.end(), w.begin() + pos + 1, w.end());
      out.add(next, c * sc);
    }
  }
  return out;
}

TensorElement trace_at(const TensorElement& x, int pos) {
  if (pos < 0 || pos >= x.arity())
    throw std::out_of_range("trace_at: position out of range");
  TensorElement out(x.arity() - 1);
  for (const auto& [w, c] : x.terms()) {
    if (trace(w[pos]) == 0) continue;
    LabelWord next(w.begin(), w.begin() + pos);
    next.insert(next.end(), w.begin() + pos + 1, w.end());
    out.add(next, c);
  }
  return out;
}

int label_degree(const TensorElement& x) {
  int degree = -1;
  for (const auto& [w, c] : x.terms()) {
    int d = 0;
    for (Label l : w) d += label_degree(l);
    if (degree >= 0 && d != degree)
      throw std::invalid_argument("label_degree: element is not homogeneous");
    degree = d;
  }
  return degree < 0 ? 0 : degree;
}

}  // namespace arcring
