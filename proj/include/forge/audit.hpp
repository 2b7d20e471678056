#pragma once

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "forge/example.hpp"
#include "forge/morphology.hpp"
#include "forge/rules.hpp"
#include "forge/token.hpp"

// Output-side checks re-run over every emitted example.
namespace forge {

// Structural invariants of a FusionExample. Returns one message per violation.
inline std::vector<std::string> validate_example(const FusionExample& ex) {
  std::vector<std::string> problems;
  const bool identical = ex.incoherent_first.same_text(ex.coherent_first) &&
                         ex.incoherent_second.same_text(ex.coherent_second);
  const bool none = ex.discourse_type == DiscourseType::kNone;
  if (none && !identical) problems.push_back("None example differs from its coherent text");
  if (!none && identical) problems.push_back("non-None example equals its coherent text");

  const bool connective_type = involves_connective(ex.discourse_type);
  if (connective_type && ex.connective.empty()) problems.push_back("connective type without a connective");
  if (!connective_type && !ex.connective.empty()) problems.push_back("connective set on a non-connective type");
  if (ex.connective != normalize_connective(ex.connective)) problems.push_back("connective is not normalized");

  if (ex.incoherent_first.empty() || ex.incoherent_second.empty()) {
    problems.push_back("empty incoherent sentence");
    return problems;
  }
  if (ex.coherent_first.empty()) problems.push_back("empty coherent text");
  if (!involves_anaphora(ex.discourse_type) && (ex.has_coref_pronoun || ex.has_coref_nominal)) {
    problems.push_back("coref flag on a type without anaphora");
  }
  if (involves_anaphora(ex.discourse_type) && !ex.has_coref_pronoun && !ex.has_coref_nominal) {
    problems.push_back("anaphora type without a coref flag");
  }
  if (none) return problems;

  for (const auto* s : {&ex.incoherent_first, &ex.incoherent_second}) {
    if (!is_terminal(s->back().text)) problems.push_back("sentence lacks terminal punctuation: " + s->str());
    for (const auto& t : *s) {
      if (is_punctuation(t.text)) continue;
      if (std::islower(static_cast<unsigned char>(t.text.front()))) {
        problems.push_back("sentence does not start with a capital: " + s->str());
      }
      break;
    }
  }
  return problems;
}

// Incoherent tokens that are neither in the coherent text (ignoring case) nor
// one of the sanctioned insertions: a copula, "'s", ".", or the simple past of
// a gerund present in the coherent text. Mention copies come from the coherent
// text, so they pass the first test.
inline std::vector<std::string> audit_content(const FusionExample& ex,
                                              const IrregularVerbs& verbs = IrregularVerbs::builtin()) {
  std::set<std::string> allowed = {"is", "are", "was", "were", "'s", "."};
  for (const auto* s : {&ex.coherent_first, &ex.coherent_second}) {
    for (const auto& t : *s) {
      allowed.insert(to_lower(t.text));
      if (t.pos == "VBG") {
        if (auto past = retense_vbg_to_past(t, verbs)) allowed.insert(past->text);
      }
    }
  }
  std::vector<std::string> unexpected;
  for (const auto* s : {&ex.incoherent_first, &ex.incoherent_second}) {
    for (const auto& t : *s) {
      if (!allowed.count(to_lower(t.text))) unexpected.push_back(t.text);
    }
  }
  return unexpected;
}

}  // namespace forge
