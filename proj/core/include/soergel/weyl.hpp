#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace soergel {

/// Element of S_n in one-line notation: perm()[i] = w(i + 1), values 1-based.
/// Composition is (v * w)(i) = v(w(i)); simple reflection s_i swaps i and i + 1.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> one_line);

  static WeylElement identity(int n);
  static WeylElement simple(int n, int i);
  static WeylElement longest(int n);
  /// "321"; only for n <= 9.
  static WeylElement parse(std::string_view one_line);

  [[nodiscard]] int rank() const { return static_cast<int>(perm_.size()); }
  [[nodiscard]] const std::vector<int>& perm() const { return perm_; }
  [[nodiscard]] int operator()(int i) const { return perm_[static_cast<std::size_t>(i - 1)]; }

  [[nodiscard]] int length() const;
  [[nodiscard]] WeylElement inverse() const;
  [[nodiscard]] WeylElement times_simple(int i) const;  // w * s_i
  [[nodiscard]] WeylElement simple_times(int i) const;  // s_i * w
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::set<int> right_descents() const;
  [[nodiscard]] std::set<int> left_descents() const;

  [[nodiscard]] std::string to_string() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
};

/// Word in the simple reflections s_1..s_{n-1} of S_n.
struct Word {
  int n = 1;
  std::vector<int> letters;

  Word() = default;
  Word(int rank, std::vector<int> l);

  [[nodiscard]] std::size_t size() const { return letters.size(); }
  /// "1,2,1"; empty word prints as "".
  [[nodiscard]] std::string to_string() const;
  static Word parse(int n, std::string_view text);

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

WeylElement evaluate(const Word& word);
WeylElement demazure_product(const Word& word);
/// Some reduced word, lexicographically smallest.
Word reduced_word(const WeylElement& w);
std::set<Word> reduced_words(const WeylElement& w);
/// Bruhat order via the lifting recursion: for a right descent s of w,
/// x <= w iff min(x, xs) <= ws.
bool bruhat_leq(const WeylElement& x, const WeylElement& w);

/// Default and hard limits on the rank n of S_n.
inline constexpr int kDefaultRankCap = 5;

/// All n! elements ordered by length, then lexicographically.
std::vector<WeylElement> all_elements(int n, int cap = kDefaultRankCap);
/// Every word of the given length in s_1..s_{n-1}.
std::vector<Word> all_words(int n, std::size_t length);

/// Index tables for one S_n: element numbering, lengths, multiplication by
/// simple reflections and the full Bruhat relation.
class WeylGroup {
 public:
  explicit WeylGroup(int n, int cap = kDefaultRankCap);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<WeylElement>& elements() const { return elements_; }
  [[nodiscard]] const WeylElement& element(std::size_t idx) const { return elements_[idx]; }
  [[nodiscard]] std::size_t index(const WeylElement& w) const;
  [[nodiscard]] int length(std::size_t idx) const { return lengths_[idx]; }
  [[nodiscard]] std::size_t right_mult(std::size_t idx, int i) const;  // w s_i
  [[nodiscard]] std::size_t left_mult(std::size_t idx, int i) const;   // s_i w
  [[nodiscard]] std::size_t inverse(std::size_t idx) const { return inverse_[idx]; }
  [[nodiscard]] bool leq(std::size_t x, std::size_t w) const { return bruhat_[x * size() + w]; }
  [[nodiscard]] std::size_t identity_index() const { return 0; }
  [[nodiscard]] std::size_t longest_index() const { return size() - 1; }

 private:
  int n_;
  std::vector<WeylElement> elements_;
  std::map<WeylElement, std::size_t> index_;
  std::vector<int> lengths_;
  std::vector<std::size_t> right_;  // idx * (n-1) + (i-1)
  std::vector<std::size_t> left_;
  std::vector<std::size_t> inverse_;
  std::vector<bool> bruhat_;
};

}  // namespace soergel
