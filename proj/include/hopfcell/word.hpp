#ifndef HOPFCELL_WORD_HPP
#define HOPFCELL_WORD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hopfcell {

/// A monomial in the free algebra: a sequence of generator indices.
/// The empty word is the identity.
struct Word {
  std::vector<std::int32_t> letters;

  Word() = default;
  explicit Word(std::vector<std::int32_t> ls) : letters(std::move(ls)) {}
  static Word one() { return Word{}; }
  static Word single(std::int32_t g) { return Word{{g}}; }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

Word operator*(const Word& a, const Word& b);
Word subword(const Word& w, std::size_t pos, std::size_t len);
/// w[0:pos) + mid + w[pos+len:)
Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& mid);
bool contains_subword(const Word& w, const Word& pat);

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto l : w.letters) {
      h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Named generators with a total precedence order (used by the degree-lex
/// term order) and optional inverse pairing for group-like generators.
class Alphabet {
 public:
  Alphabet() = default;
  /// Precedence defaults to declaration order.
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::vector<std::string> names, const std::vector<std::string>& precedence);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::int32_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 when unknown
  int rank(std::int32_t i) const { return rank_.at(i); }
  /// Generator names listed in increasing precedence.
  std::vector<std::string> precedence_names() const;

  void set_inverse_pair(std::int32_t g, std::int32_t ginv);
  std::int32_t inverse_of(std::int32_t g) const { return inverse_.at(g); }  // -1 if none

  bool operator==(const Alphabet& o) const {
    return names_ == o.names_ && rank_ == o.rank_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> rank_;
  std::vector<std::int32_t> inverse_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Degree-lexicographic comparison: by length, then letter-wise by precedence.
int word_cmp(const Alphabet& a, const Word& u, const Word& v);
bool word_less(const Alphabet& a, const Word& u, const Word& v);

std::string word_str(const Alphabet& a, const Word& w);

}  // namespace hopfcell

#endif
