#include "soergel/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "soergel/errors.hpp"

namespace soergel {

WeylElement::WeylElement(std::vector<int> one_line) : perm_(std::move(one_line)) {
  std::vector<bool> seen(perm_.size() + 1, false);
  for (int v : perm_) {
    if (v < 1 || v > static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("WeylElement: not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("WeylElement::simple: index out of range");
  return identity(n).times_simple(i);
}

WeylElement WeylElement::longest(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::parse(std::string_view one_line) {
  std::vector<int> p;
  for (char ch : one_line) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("WeylElement::parse: bad character");
    p.push_back(ch - '0');
  }
  if (p.empty()) throw std::invalid_argument("WeylElement::parse: empty");
  return WeylElement(std::move(p));
}

int WeylElement::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < perm_.size(); ++i)
    for (std::size_t j = i + 1; j < perm_.size(); ++j)
      if (perm_[i] > perm_[j]) ++inv;
  return inv;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> q(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) q[static_cast<std::size_t>(perm_[i] - 1)] = int(i) + 1;
  return WeylElement(std::move(q));
}

WeylElement WeylElement::times_simple(int i) const {
  if (i < 1 || i >= rank()) throw std::out_of_range("times_simple: index out of range");
  WeylElement r = *this;
  std::swap(r.perm_[static_cast<std::size_t>(i - 1)], r.perm_[static_cast<std::size_t>(i)]);
  return r;
}

WeylElement WeylElement::simple_times(int i) const {
  if (i < 1 || i >= rank()) throw std::out_of_range("simple_times: index out of range");
  WeylElement r = *this;
  for (int& v : r.perm_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return r;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != int(i) + 1) return false;
  return true;
}

std::set<int> WeylElement::right_descents() const {
  std::set<int> d;
  for (int i = 1; i < rank(); ++i)
    if ((*this)(i) > (*this)(i + 1)) d.insert(i);
  return d;
}

std::set<int> WeylElement::left_descents() const { return inverse().right_descents(); }

std::string WeylElement::to_string() const {
  std::string s;
  for (int v : perm_) {
    if (v > 9) throw std::logic_error("WeylElement::to_string: rank too large for one-line form");
    s += static_cast<char>('0' + v);
  }
  return s;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("WeylElement: rank mismatch");
  std::vector<int> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[static_cast<std::size_t>(b.perm_[i] - 1)];
  return WeylElement(std::move(p));
}

Word::Word(int rank, std::vector<int> l) : n(rank), letters(std::move(l)) {
  for (int s : letters)
    if (s < 1 || s >= n) throw std::out_of_range("Word: letter " + std::to_string(s) + " out of range");
}

std::string Word::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(letters[i]);
  }
  return s;
}

Word Word::parse(int n, std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string tok(text.substr(i, j - i));
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("Word::parse: bad letter '" + tok + "'");
    letters.push_back(std::stoi(tok));
    i = j + 1;
    if (j == text.size()) break;
    if (i == text.size()) throw std::invalid_argument("Word::parse: trailing comma");
  }
  return Word(n, std::move(letters));
}

WeylElement evaluate(const Word& word) {
  WeylElement w = WeylElement::identity(word.n);
  for (int s : word.letters) w = w.times_simple(s);
  return w;
}

WeylElement demazure_product(const Word& word) {
  WeylElement w = WeylElement::identity(word.n);
  for (int s : word.letters) {
    WeylElement ws = w.times_simple(s);
    if (ws.length() > w.length()) w = std::move(ws);
  }
  return w;
}

Word reduced_word(const WeylElement& w) {
  // Peel the smallest left descent each step: w = s_i (s_i w).
  std::vector<int> letters;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int s = *cur.left_descents().begin();
    letters.push_back(s);
    cur = cur.simple_times(s);
  }
  return Word(w.rank(), std::move(letters));
}

std::set<Word> reduced_words(const WeylElement& w) {
  std::set<Word> out;
  std::vector<int> prefix;
  std::function<void(const WeylElement&)> rec = [&](const WeylElement& cur) {
    if (cur.is_identity()) {
      std::vector<int> letters(prefix.rbegin(), prefix.rend());
      out.insert(Word(w.rank(), std::move(letters)));
      return;
    }
    for (int s : cur.right_descents()) {
      prefix.push_back(s);
      rec(cur.times_simple(s));
      prefix.pop_back();
    }
  };
  rec(w);
  return out;
}

bool bruhat_leq(const WeylElement& x, const WeylElement& w) {
  if (x.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  std::map<std::pair<WeylElement, WeylElement>, bool> memo;
  std::function<bool(const WeylElement&, const WeylElement&)> leq = [&](const WeylElement& a,
                                                                        const WeylElement& b) {
    if (a.is_identity()) return true;
    if (a.length() > b.length()) return false;
    if (b.is_identity()) return false;
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int s = *b.right_descents().begin();
    WeylElement as = a.times_simple(s);
    const WeylElement& lower = as.length() < a.length() ? as : a;
    bool r = leq(lower, b.times_simple(s));
    memo.emplace(key, r);
    return r;
  };
  return leq(x, w);
}

std::vector<WeylElement> all_elements(int n, int cap) {
  if (n < 1) throw std::invalid_argument("all_elements: rank must be positive");
  if (n > cap)
    throw SizeLimitError("S_" + std::to_string(n) + " exceeds the rank cap " + std::to_string(cap));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
  return out;
}

std::vector<Word> all_words(int n, std::size_t length) {
  std::vector<Word> out;
  if (n < 2) {
    if (length == 0) out.emplace_back(n, std::vector<int>{});
    return out;
  }
  std::vector<int> letters(length, 1);
  while (true) {
    out.emplace_back(n, letters);
    std::size_t k = length;
    while (k > 0 && letters[k - 1] == n - 1) {
      letters[k - 1] = 1;
      --k;
    }
    if (k == 0) break;
    ++letters[k - 1];
  }
  return out;
}

WeylGroup::WeylGroup(int n, int cap) : n_(n), elements_(all_elements(n, cap)) {
  const std::size_t N = elements_.size();
  const auto ns = static_cast<std::size_t>(std::max(n - 1, 0));
  for (std::size_t i = 0; i < N; ++i) {
    index_.emplace(elements_[i], i);
    lengths_.push_back(elements_[i].length());
  }
  right_.resize(N * ns);
  left_.resize(N * ns);
  inverse_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    inverse_[i] = index(elements_[i].inverse());
    for (int s = 1; s < n; ++s) {
      right_[i * ns + std::size_t(s - 1)] = index(elements_[i].times_simple(s));
      left_[i * ns + std::size_t(s - 1)] = index(elements_[i].simple_times(s));
    }
  }
  // Lifting recursion, filled in order of increasing length of w.
  bruhat_.assign(N * N, false);
  for (std::size_t w = 0; w < N; ++w) {
    if (lengths_[w] == 0) {
      bruhat_[0 * N + w] = true;
      continue;
    }
    int s = *elements_[w].right_descents().begin();
    std::size_t ws = right_mult(w, s);
    for (std::size_t x = 0; x < N; ++x) {
      std::size_t xs = right_mult(x, s);
      std::size_t lower = lengths_[xs] < lengths_[x] ? xs : x;
      bruhat_[x * N + w] = bruhat_[lower * N + ws];
    }
  }
}

std::size_t WeylGroup::index(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("WeylGroup::index: element of wrong rank");
  return it->second;
}

std::size_t WeylGroup::right_mult(std::size_t idx, int i) const {
  return right_[idx * std::size_t(n_ - 1) + std::size_t(i - 1)];
}

std::size_t WeylGroup::left_mult(std::size_t idx, int i) const {
  return left_[idx * std::size_t(n_ - 1) + std::size_t(i - 1)];
}

}  // namespace soergel
