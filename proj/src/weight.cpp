#include "hopfcell/weight.hpp"

#include "hopfcell/parse.hpp"

#include <algorithm>
#include <cctype>

namespace hopfcell {

WeightWord WeightWord::generator(const GroupPresentation& g, int gen, long exp) {
  WeightWord w = one(g);
  w.push(gen, exp);
  return w;
}

void WeightWord::push(int gen, long exp) {
  if (exp == 0) return;
  if (abelian_) {
    auto it = std::lower_bound(syl_.begin(), syl_.end(), gen,
                               [](const auto& s, int k) { return s.first < k; });
    if (it != syl_.end() && it->first == gen) {
      it->second += exp;
      if (it->second == 0) syl_.erase(it);
    } else {
      syl_.insert(it, {gen, exp});
    }
  } else {
    if (!syl_.empty() && syl_.back().first == gen) {
      syl_.back().second += exp;
      if (syl_.back().second == 0) syl_.pop_back();
    } else {
      syl_.push_back({gen, exp});
    }
  }
}

long WeightWord::length() const {
  long n = 0;
  for (const auto& [g, e] : syl_) n += e < 0 ? -e : e;
  return n;
}

std::vector<std::pair<int, int>> WeightWord::letters() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [g, e] : syl_) {
    int sign = e < 0 ? -1 : 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) out.emplace_back(g, sign);
  }
  return out;
}

std::vector<long> WeightWord::exponents(int rank) const {
  std::vector<long> out(rank, 0);
  for (const auto& [g, e] : syl_) out.at(g) += e;
  return out;
}

WeightWord WeightWord::operator*(const WeightWord& o) const {
  WeightWord r = *this;
  for (const auto& [g, e] : o.syl_) r.push(g, e);
  return r;
}

WeightWord WeightWord::inverse() const {
  WeightWord r(abelian_);
  if (abelian_) {
    r.syl_ = syl_;
    for (auto& [g, e] : r.syl_) e = -e;
  } else {
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push(it->first, -it->second);
  }
  return r;
}

WeightWord WeightWord::pow(long e) const {
  WeightWord base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  WeightWord r(abelian_);
  for (long k = 0; k < n; ++k) r = r * base;
  return r;
}

bool WeightWord::operator<(const WeightWord& o) const {
  if (abelian_ != o.abelian_) return abelian_ < o.abelian_;
  return syl_ < o.syl_;
}

std::string WeightWord::str(const GroupPresentation& g) const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& [gen, e] : syl_) {
    if (!out.empty()) out += "*";
    out += g.gen_names.at(gen);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

WeightWord parse_weight(const std::string& src, const GroupPresentation& g) {
  WeightWord w = WeightWord::one(g);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < src.size() && (std::isspace(static_cast<unsigned char>(src[i])) || src[i] == '*'))
      ++i;
  };
  skip();
  if (i < src.size() && src[i] == '1' && src.substr(i) == "1") return w;
  while (i < src.size()) {
    skip();
    if (i >= src.size()) break;
    if (!(std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_'))
      throw ParseError("expected generator name at position " + std::to_string(i) + " in '" +
                       src + "'");
    std::size_t j = i;
    while (j < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
      ++j;
    std::string name = src.substr(i, j - i);
    i = j;
    auto it = std::find(g.gen_names.begin(), g.gen_names.end(), name);
    if (it == g.gen_names.end())
      throw ParseError("unknown weight generator '" + name + "'");
    long e = 1;
    if (i < src.size() && src[i] == '^') {
      ++i;
      bool neg = false;
      while (i < src.size() && src[i] == '-') {
        neg = !neg;
        ++i;
      }
      std::size_t k = i;
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      if (k == i) throw ParseError("expected exponent after '^' in '" + src + "'");
      e = std::stol(src.substr(i, k - i));
      if (neg) e = -e;
      i = k;
    }
    w.push(static_cast<int>(it - g.gen_names.begin()), e);
    skip();
  }
  return w;
}

WeightWord word_to_weight(const GroupPresentation& g, const Word& w) {
  WeightWord out = WeightWord::one(g);
  for (auto letter : w.letters) out.push(letter / 2, letter % 2 == 0 ? 1 : -1);
  return out;
}

Word weight_to_word(const GroupPresentation& g, const WeightWord& lambda) {
  (void)g;
  Word w;
  for (const auto& [gen, sign] : lambda.letters())
    w.letters.push_back(static_cast<std::int32_t>(2 * gen + (sign < 0 ? 1 : 0)));
  return w;
}

std::vector<WeightWord> weight_words_up_to(const GroupPresentation& g, int max_len) {
  std::vector<WeightWord> out{WeightWord::one(g)};
  std::vector<WeightWord> level = out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<WeightWord> next;
    for (const auto& w : level)
      for (int gen = 0; gen < g.rank(); ++gen)
        for (int sign : {1, -1}) {
          WeightWord x = w * WeightWord::generator(g, gen, sign);
          if (x.length() == len) next.push_back(std::move(x));
        }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace hopfcell
