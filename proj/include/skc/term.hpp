// term.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace skc {

using AtomId = std::uint32_t;
using TermId = std::uint32_t;

inline constexpr TermId kInvalidTerm = 0xffffffffu;

/// Atoms are either rule-bearing basis symbols or inert variables.
enum class AtomKind : std::uint8_t { Basis, Inert };

/// One step from an application node: into the function or the argument.
enum class Dir : std::uint8_t { Fn, Arg };

/// Root-to-subterm address. The empty path addresses the whole term.
using SpinePath = std::vector<Dir>;

/// "FA..." rendering of a path; the empty path renders as "".
std::string path_string(const SpinePath& path);

/// Left-spine view of a term: head is always a leaf, and folding the
/// arguments back onto the head reproduces the term.
struct Spine {
  TermId head;
  std::vector<TermId> args;
};

/// Hash-consing store for immutable binary application trees.
///
/// Structurally equal terms always receive the same id, so id equality is
/// structural equality and sizes can be memoized per node. Atom names are
/// unique within a store. Stores are not thread-safe; concurrent code uses
/// one store per worker and merges results by structure.
class TermStore {
 public:
  TermStore() = default;
  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;

  /// Registers an atom, or returns the existing one with the same name.
  /// Throws std::invalid_argument on a kind conflict or a malformed name.
  AtomId add_atom(std::string_view name, AtomKind kind);
  std::optional<AtomId> find_atom(std::string_view name) const;
  /// Throws std::out_of_range for an unknown atom name.
  AtomId atom_id(std::string_view name) const;
  const std::string& atom_name(AtomId id) const;
  AtomKind atom_kind(AtomId id) const;
  std::size_t atom_count() const { return atoms_.size(); }

  /// Changes the kind of an atom in place. Intended for rule loaders that
  /// claim a freshly registered head as basis; use sparingly.
  void set_atom_kind(AtomId id, AtomKind kind);

  TermId leaf(AtomId atom);
  TermId app(TermId fn, TermId arg);

  bool is_leaf(TermId t) const { return node(t).fn == kInvalidTerm; }
  AtomId leaf_atom(TermId t) const;
  TermId fn(TermId t) const;
  TermId arg(TermId t) const;

  /// Number of leaves. This is the size measure used throughout.
  std::uint64_t size(TermId t) const { return node(t).size; }

  std::size_t node_count() const { return nodes_.size(); }

  /// Watermark for scratch reclamation: release(mark()) drops every node
  /// interned after the mark. Only safe while no retained term references
  /// the dropped ids.
  std::size_t mark() const { return nodes_.size(); }
  void release(std::size_t mark);

 private:
  struct Node {
    TermId fn;   // kInvalidTerm marks a leaf
    TermId arg;  // holds the atom id for a leaf
    std::uint64_t size;
  };
  const Node& node(TermId t) const;

  std::vector<Node> nodes_;
  std::vector<TermId> atom_leaf_;
  std::unordered_map<std::uint64_t, TermId> apps_;
  struct AtomInfo {
    std::string name;
    AtomKind kind;
  };
  std::vector<AtomInfo> atoms_;
  std::unordered_map<std::string, AtomId> atom_ids_;
};

Spine spine(const TermStore& store, TermId t);

/// Left fold: fold_spine(h, [a, b, c]) = ((h a) b) c.
TermId fold_spine(TermStore& store, TermId head, std::span<const TermId> args);

/// Throws std::out_of_range when the path walks through a leaf.
TermId subterm_at(const TermStore& store, TermId t, const SpinePath& path);
TermId replace_at(TermStore& store, TermId t, const SpinePath& path, TermId replacement);

}  // namespace skc
