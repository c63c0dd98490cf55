#include "hopfcell/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfcell {

Word operator*(const Word& a, const Word& b) {
  Word r;
  r.letters.reserve(a.size() + b.size());
  r.letters.insert(r.letters.end(), a.letters.begin(), a.letters.end());
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
  Word r;
  r.letters.assign(w.letters.begin() + pos, w.letters.begin() + pos + len);
  return r;
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& mid) {
  Word r;
  r.letters.reserve(w.size() - len + mid.size());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  r.letters.insert(r.letters.end(), mid.letters.begin(), mid.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin() + pos + len, w.letters.end());
  return r;
}

bool contains_subword(const Word& w, const Word& pat) {
  if (pat.size() > w.size()) return false;
  if (pat.empty()) return true;
  for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < pat.size(); ++j)
      if (w.letters[i + j] != pat.letters[j]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  rank_.resize(names_.size());
  inverse_.assign(names_.size(), -1);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    rank_[i] = static_cast<int>(i);
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate generator name: " + names_[i]);
  }
}

Alphabet::Alphabet(std::vector<std::string> names, const std::vector<std::string>& precedence)
    : Alphabet(std::move(names)) {
  if (precedence.size() != names_.size())
    throw std::invalid_argument("precedence must list every generator exactly once");
  std::vector<bool> seen(names_.size(), false);
  for (std::size_t p = 0; p < precedence.size(); ++p) {
    int i = index_of(precedence[p]);
    if (i < 0) throw std::invalid_argument("precedence names unknown generator: " + precedence[p]);
    if (seen[i]) throw std::invalid_argument("precedence repeats generator: " + precedence[p]);
    seen[i] = true;
    rank_[i] = static_cast<int>(p);
  }
}

int Alphabet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> Alphabet::precedence_names() const {
  std::vector<std::string> out(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out[rank_[i]] = names_[i];
  return out;
}

void Alphabet::set_inverse_pair(std::int32_t g, std::int32_t ginv) {
  inverse_.at(g) = ginv;
  inverse_.at(ginv) = g;
}

int word_cmp(const Alphabet& a, const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    int ru = a.rank(u.letters[i]), rv = a.rank(v.letters[i]);
    if (ru != rv) return ru < rv ? -1 : 1;
  }
  return 0;
}

bool word_less(const Alphabet& a, const Word& u, const Word& v) {
  return word_cmp(a, u, v) < 0;
}

std::string word_str(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += a.name(w.letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace hopfcell
