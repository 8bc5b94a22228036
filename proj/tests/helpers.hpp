#pragma once

#include <string>
#include <vector>

#include "gk/category.hpp"
#include "gk/io.hpp"
#include "oracles.hpp"

namespace testutil {

inline gk::Word to_word(const gk::Presentation& p, const oracle::Letters& w) {
  gk::Word out = p.identity(gk::object_id(0));
  for (int g : w) out.letters.push_back(gk::gen_id(static_cast<std::size_t>(g)));
  return out;
}

inline oracle::Letters letters(const gk::Word& w) {
  oracle::Letters out;
  for (auto g : w.letters) out.push_back(static_cast<int>(gk::idx(g)));
  return out;
}

inline gk::SignedWord to_signed(const gk::Presentation& p, const oracle::SignedLetters& w) {
  gk::SignedWord out{{}, gk::object_id(0), gk::object_id(0)};
  (void)p;
  for (auto l : w) out.letters.push_back({gk::gen_id(static_cast<std::size_t>(l.gen)), l.inv});
  return out;
}

inline oracle::SignedLetters signed_letters(const gk::SignedWord& w) {
  oracle::SignedLetters out;
  for (auto l : w.letters) out.push_back({static_cast<int>(gk::idx(l.gen)), l.inverse});
  return out;
}

inline gk::Presentation braid_presentation(int n) {
  std::vector<std::string> names;
  for (int i = 0; i + 1 < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  auto p = gk::Presentation::monoid(names);
  for (const auto& [l, r] : oracle::braid_rules(n)) p.add_relation(to_word(p, l), to_word(p, r));
  return p;
}

inline gk::Presentation free_abelian_presentation(int n) {
  static const char* kNames[] = {"x", "y", "z", "t"};
  auto p = gk::Presentation::monoid(std::vector<std::string>(kNames, kNames + n));
  for (const auto& [l, r] : oracle::commutation_rules(n)) p.add_relation(to_word(p, l), to_word(p, r));
  return p;
}

inline gk::Word w(const gk::Presentation& p, const std::string& text) { return gk::parse_word(p, text); }
inline gk::SignedWord sw(const gk::Presentation& p, const std::string& text) {
  return gk::parse_signed_word(p, text);
}

}  // namespace testutil
