#include "artin/word.hpp"

#include <algorithm>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word freely_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

long abelianized_sum(const Word& w) {
  long s = 0;
  for (const Letter& l : w) s += l.exp;
  return s;
}

long exponent_sum(const Word& w, std::size_t gen) {
  long s = 0;
  for (const Letter& l : w)
    if (l.gen == gen) s += l.exp;
  return s;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    std::string name = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string e = tok.substr(caret + 1);
      if (e == "-1")
        exp = -1;
      else if (e == "1" || e == "+1")
        exp = 1;
      else
        throw Error("bad exponent in '" + tok + "' (only 1 and -1 allowed)");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error("unknown generator '" + name + "'");
    out.push_back({static_cast<std::size_t>(it - names.begin()), exp});
  }
  return out;
}

std::vector<std::string> word_tokens(const Word& w,
                                     const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Letter& l : w)
    out.push_back(l.exp < 0 ? names.at(l.gen) + "^-1" : names.at(l.gen));
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& tok : word_tokens(w, names)) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

}  // namespace artin
