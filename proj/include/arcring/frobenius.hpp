#pragma once

// The Frobenius algebra A = Z[X]/(X^2) with trace tr(1) = 0, tr(X) = 1,
// and its tensor powers.  Multiplication is the pants cobordism (merge),
// comultiplication the inverted pants (split).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arcring {

enum class Label : std::uint8_t { One = 0, X = 1 };

inline int label_degree(Label l) { return l == Label::X ? 2 : 0; }
char label_char(Label l);

using LabelWord = std::vector<Label>;

std::string word_to_string(const LabelWord& w);
LabelWord word_from_string(const std::string& s);

/// Sparse element of A^{⊗k}.  Arity 0 holds scalars.
class TensorElement {
 public:
  explicit TensorElement(int arity = 0) : arity_(arity) {}

  static TensorElement basis(LabelWord word, long long coeff = 1);
  static TensorElement scalar(long long value);

  int arity() const { return arity_; }
  const std::map<LabelWord, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const LabelWord& w) const;

  void add(const LabelWord& word, long long coeff);

  TensorElement& operator+=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator*(long long c, const TensorElement& x);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  std::string to_string() const;

 private:
  int arity_;
  std::map<LabelWord, long long> terms_;
};

TensorElement merge(Label x, Label y);
TensorElement split(Label x);
int trace(Label x);
/// Linear extension of the trace to A.
long long trace(const TensorElement& x);

/// Tensor product of two elements (concatenating words).
TensorElement tensor(const TensorElement& x, const TensorElement& y);

/// id^{⊗pos} ⊗ merge ⊗ id: multiplies tensor factors pos and pos+1.
TensorElement merge_at(const TensorElement& x, int pos);
/// id^{⊗pos} ⊗ split ⊗ id: splits factor pos into two.
TensorElement split_at(const TensorElement& x, int pos);
/// Applies the trace to factor pos, reducing arity by one.
TensorElement trace_at(const TensorElement& x, int pos);
/// Sum of label degrees; throws if x is not homogeneous.
int label_degree(const TensorElement& x);

}  // namespace arcring
