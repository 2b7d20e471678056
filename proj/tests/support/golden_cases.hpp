#pragma once

#include <string>
#include <vector>

// Expected engine output for each document in fixtures/golden.jsonl.
// Two-sentence documents are run as a pair, one-sentence documents as a
// single candidate.
namespace forge::testing {

struct GoldenCase {
  std::string doc_id;
  std::string first;
  std::string second;
  std::string type_code;
  std::string connective;
  bool pronoun = false;
  bool nominal = false;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"hebden", "Hebden Bridge is a popular place to live .",
       "Space is limited due to the steep valleys and lack of flat land .", "PAIR_CONN", "however"},
      {"rider", "Rider entered the weekend averaging 23.0 points , good for 10th in the league .",
       "Rider said those numbers mean little because of the Hawks ' 11 - 18 record .", "PAIR_ANAPHORA", "", true},
      {"croly", "The friendship somewhat healed years later .", "It was a devastating loss to Croly .",
       "SINGLE_CONN_START", "although"},
      {"gym", "Open workouts are held every Sunday .", "The gym is closed for a holiday or other special events .",
       "SINGLE_CONN_INNER", "unless"},
      {"walker", "Walker stated that the proponents were unlikely to succeed in this appeal .",
       "Walker rejected the stay request on October 23 .", "SINGLE_CATAPHORA", ""},
      {"floods", "The time of the autumn floods came .", "The hundred streams poured into the Yellow River .",
       "SINGLE_S_COORD", "and"},
      {"sharks", "The Sharks started the year 0 - 4 .", "The Sharks recovered to claim sixth spot .",
       "SINGLE_VP_COORD", "yet"},
      {"kubler", "Kubler remained a revered figure in the wealthy alpine nation .",
       "Kubler retired from cycling in 1957 .", "SINGLE_RELATIVE", ""},
      {"frigidarium", "The frigidarium was where guests would cool off in a large pool .",
       "The frigidarium is the last stop in the bathhouse .", "SINGLE_APPOSITION", ""},
      {"jacksonville", "The Jacksonville Jazz Piano Competition takes place at the Florida Theatre .",
       "The Jacksonville Jazz Piano Competition is a 30 year tradition .", "SINGLE_APPOSITION", ""},
      {"ruiz", "Ruiz ordered his first shot to be retaken .",
       "Brazilian players entered the penalty area before Ruiz 's kick .", "SINGLE_CONN_INNER_ANAPHORA", "because",
       true},
      {"since-title", "The club won the title .", "The club has slumped .", "SINGLE_CONN_START", "since"},
      {"trailing", "The team trailed by two .", "The team called a timeout .", "SINGLE_CATAPHORA", ""},
      {"by-then", "The crowd waited for the gates .", "Crowds had gathered .", "PAIR_CONN", "by then"},
      {"by-then-fans", "The fans arrived at the stadium early .", "The fans had gathered outside the gates .",
       "PAIR_CONN_ANAPHORA", "by then", true},
      {"lighthouse", "The old lighthouse keeper retired in 1990 .",
       "The old lighthouse keeper tended the lamp for decades .", "SINGLE_RELATIVE", ""},
  };
  return cases;
}

}  // namespace forge::testing
