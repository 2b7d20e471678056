#!/usr/bin/env python3
"""Regenerates include/forge/detail/default_data.hpp from the files in data/."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
lexicons = (root / "data" / "lexicons.txt").read_text(encoding="utf-8")
verbs = (root / "data" / "irregular_verbs.tsv").read_text(encoding="utf-8")

out = f'''// Generated by tools/embed_data.py from data/. Do not edit by hand.
#pragma once

#include <string_view>

namespace forge::detail {{

inline constexpr std::string_view kDefaultLexicons = R"FORGE({lexicons})FORGE";

inline constexpr std::string_view kDefaultIrregularVerbs = R"FORGE({verbs})FORGE";

}}  // namespace forge::detail
'''
(root / "include" / "forge" / "detail" / "default_data.hpp").write_text(out, encoding="utf-8")
