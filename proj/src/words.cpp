#include "fpword/words.hpp"

#include <sstream>

namespace fpw {

bool subscript_increasing(const SubWord& w) {
  for (std::size_t t = 1; t < w.size(); ++t)
    if (w[t].sub != (w[t - 1].sub + 1) % 8) return false;
  return true;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  long long v;
  while (in >> v) w.push_back(static_cast<Letter>(v));
  return w;
}

SubWord parse_subscripted(const std::string& text) {
  SubWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto pos = tok.rfind('_');
    if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size())
      throw std::invalid_argument("bad subscripted token: " + tok);
    w.push_back(sub_letter(std::stoi(tok.substr(0, pos)), std::stoi(tok.substr(pos + 1))));
  }
  return w;
}

std::string format_plain(const Word& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += std::to_string(w[t]);
  }
  return out;
}

std::string format_bfile(const Word& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    out += std::to_string(t);
    out += ' ';
    out += std::to_string(w[t]);
    out += '\n';
  }
  return out;
}

std::string format_columns(const Word& w, std::size_t width) {
  if (width == 0) throw std::invalid_argument("column width must be positive");
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    out += std::to_string(w[t]);
    out += (t % width == width - 1) ? '\n' : ' ';
  }
  if (!w.empty() && w.size() % width != 0) out += '\n';
  return out;
}

std::string format_subletter(SubLetter l) {
  return std::to_string(l.value) + "_" + std::to_string(l.sub);
}

std::string format_subscripted(const SubWord& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += format_subletter(w[t]);
  }
  return out;
}

}  // namespace fpw
