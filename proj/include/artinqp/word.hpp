#ifndef ARTINQP_WORD_HPP
#define ARTINQP_WORD_HPP

#include <map>
#include <string>
#include <vector>

namespace artinqp {

// One syllable of a group word: generator name with a nonzero exponent.
struct Syllable {
  std::string gen;
  int exp = 1;

  bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

// A freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syl) : syl_(std::move(syl)) { reduce(); }

  static Word gen(const std::string& g, int e = 1) {
    Word w;
    if (e != 0) w.syl_.push_back({g, e});
    return w;
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  size_t length() const {  // letter count
    size_t n = 0;
    for (const auto& s : syl_) n += static_cast<size_t>(s.exp < 0 ? -s.exp : s.exp);
    return n;
  }

  Word& append(const std::string& g, int e) {
    if (e == 0) return *this;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += e;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back({g, e});
    }
    return *this;
  }

  Word& operator*=(const Word& o) {
    for (const auto& s : o.syl_) append(s.gen, s.exp);
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const {
    Word r;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.append(it->gen, -it->exp);
    return r;
  }

  Word pow(int n) const {
    Word base = n < 0 ? inverse() : *this;
    int m = n < 0 ? -n : n;
    Word r;
    for (int i = 0; i < m; ++i) r *= base;
    return r;
  }

  // Exponent sum per generator.
  std::map<std::string, long> exponent_sums() const {
    std::map<std::string, long> m;
    for (const auto& s : syl_) m[s.gen] += s.exp;
    for (auto it = m.begin(); it != m.end();)
      it = (it->second == 0) ? m.erase(it) : std::next(it);
    return m;
  }

  bool operator==(const Word& o) const { return syl_ == o.syl_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  std::string str() const;  // "a b^2 a^-1" style; "1" for the identity

 private:
  void reduce() {
    std::vector<Syllable> out;
    for (const auto& s : syl_) {
      if (s.exp == 0) continue;
      if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp += s.exp;
        if (out.back().exp == 0) out.pop_back();
      } else {
        out.push_back(s);
      }
    }
    syl_ = std::move(out);
  }

  std::vector<Syllable> syl_;
};

}  // namespace artinqp

#endif
