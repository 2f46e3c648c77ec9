// term.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace skc {

namespace {

bool lower_or_digit(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

// Accepted shapes: single uppercase letter, lowercase identifier, or a
// rule-template placeholder "$1".."$9".
bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] >= 'A' && name[0] <= 'Z') return name.size() == 1;
  if (name[0] == '$') return name.size() == 2 && name[1] >= '1' && name[1] <= '9';
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1))
    if (!lower_or_digit(c)) return false;
  return true;
}

}  // namespace

std::string path_string(const SpinePath& path) {
  std::string out;
  out.reserve(path.size());
  for (Dir d : path) out.push_back(d == Dir::Fn ? 'F' : 'A');
  return out;
}

AtomId TermStore::add_atom(std::string_view name, AtomKind kind) {
  auto it = atom_ids_.find(std::string(name));
  if (it != atom_ids_.end()) {
    if (atoms_[it->second].kind != kind)
      throw std::invalid_argument("atom '" + std::string(name) + "' already registered with a different kind");
    return it->second;
  }
  if (!valid_atom_name(name))
    throw std::invalid_argument("malformed atom name: '" + std::string(name) + "'");
  AtomId id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back({std::string(name), kind});
  atom_ids_.emplace(std::string(name), id);
  atom_leaf_.push_back(kInvalidTerm);
  return id;
}

std::optional<AtomId> TermStore::find_atom(std::string_view name) const {
  auto it = atom_ids_.find(std::string(name));
  if (it == atom_ids_.end()) return std::nullopt;
  return it->second;
}

AtomId TermStore::atom_id(std::string_view name) const {
  auto found = find_atom(name);
  if (!found) throw std::out_of_range("unknown atom name: '" + std::string(name) + "'");
  return *found;
}

const std::string& TermStore::atom_name(AtomId id) const { return atoms_.at(id).name; }

AtomKind TermStore::atom_kind(AtomId id) const { return atoms_.at(id).kind; }

void TermStore::set_atom_kind(AtomId id, AtomKind kind) { atoms_.at(id).kind = kind; }

TermId TermStore::leaf(AtomId atom) {
  TermId& cached = atom_leaf_.at(atom);
  if (cached != kInvalidTerm) return cached;
  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back({kInvalidTerm, atom, 1});
  cached = id;
  return id;
}

TermId TermStore::app(TermId fn, TermId arg) {
  std::uint64_t key = (static_cast<std::uint64_t>(fn) << 32) | arg;
  auto it = apps_.find(key);
  if (it != apps_.end()) return it->second;
  std::uint64_t sz = node(fn).size + node(arg).size;
  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back({fn, arg, sz});
  apps_.emplace(key, id);
  return id;
}

AtomId TermStore::leaf_atom(TermId t) const {
  const Node& n = node(t);
  if (n.fn != kInvalidTerm) throw std::invalid_argument("leaf_atom on an application");
  return n.arg;
}

TermId TermStore::fn(TermId t) const {
  const Node& n = node(t);
  if (n.fn == kInvalidTerm) throw std::invalid_argument("fn on a leaf");
  return n.fn;
}

TermId TermStore::arg(TermId t) const {
  const Node& n = node(t);
  if (n.fn == kInvalidTerm) throw std::invalid_argument("arg on a leaf");
  return n.arg;
}

void TermStore::release(std::size_t mark) {
  while (nodes_.size() > mark) {
    const Node& n = nodes_.back();
    if (n.fn == kInvalidTerm) {
      atom_leaf_[n.arg] = kInvalidTerm;
    } else {
      apps_.erase((static_cast<std::uint64_t>(n.fn) << 32) | n.arg);
    }
    nodes_.pop_back();
  }
}

const TermStore::Node& TermStore::node(TermId t) const {
  if (t >= nodes_.size()) throw std::out_of_range("term id out of range");
  return nodes_[t];
}

Spine spine(const TermStore& store, TermId t) {
  Spine s;
  while (!store.is_leaf(t)) {
    s.args.push_back(store.arg(t));
    t = store.fn(t);
  }
  s.head = t;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

TermId fold_spine(TermStore& store, TermId head, std::span<const TermId> args) {
  TermId t = head;
  for (TermId a : args) t = store.app(t, a);
  return t;
}

TermId subterm_at(const TermStore& store, TermId t, const SpinePath& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (store.is_leaf(t))
      throw std::out_of_range("path step " + std::to_string(i) + " descends through a leaf");
    t = path[i] == Dir::Fn ? store.fn(t) : store.arg(t);
  }
  return t;
}

TermId replace_at(TermStore& store, TermId t, const SpinePath& path, TermId replacement) {
  // Rebuild only the nodes along the path; everything else is shared.
  if (path.empty()) return replacement;
  std::vector<TermId> trail;
  trail.reserve(path.size());
  TermId cur = t;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (store.is_leaf(cur))
      throw std::out_of_range("path step " + std::to_string(i) + " descends through a leaf");
    trail.push_back(cur);
    cur = path[i] == Dir::Fn ? store.fn(cur) : store.arg(cur);
  }
  TermId rebuilt = replacement;
  for (std::size_t i = path.size(); i-- > 0;) {
    TermId parent = trail[i];
    rebuilt = path[i] == Dir::Fn ? store.app(rebuilt, store.arg(parent))
                                 : store.app(store.fn(parent), rebuilt);
  }
  return rebuilt;
}

}  // namespace skc
