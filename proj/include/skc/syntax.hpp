// syntax.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "skc/term.hpp"

namespace skc {

/// Paren notation is the paper-style left-associative spelling, S(KS)K.
/// Bracket notation spells every argument in brackets, s[k[s]][k].
enum class Notation { Paren, Bracket };

/// Syntax error with the byte offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t at)
      : std::runtime_error(message + " (byte " + std::to_string(at) + ")"), offset(at) {}
  std::size_t offset;
};

struct ParseOptions {
  Notation notation = Notation::Paren;
  /// Accept the historical C as an alias for K.
  bool c_means_k = false;
};

/// Parses text into the store. Unknown names auto-register as inert atoms.
/// Single letters s/k/i/j alias to a registered basis S/K/I/J; an
/// unregistered multi-letter lowercase run splits into single-letter atoms.
TermId parse_term(TermStore& store, std::string_view text, const ParseOptions& options = {});

/// Paren output uses minimal delimiters (exactly the application arguments
/// that are themselves applications get parens); bracket output brackets
/// every argument and prints S/K/I/J in lowercase.
std::string print_term(const TermStore& store, TermId t, Notation notation = Notation::Paren);

}  // namespace skc
