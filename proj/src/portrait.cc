#include "pgrowth/portrait.h"

#include <algorithm>
#include <sstream>

#include "pgrowth/error.h"

namespace pgrowth {

Portrait Portrait::leaf(std::size_t nucleus_index) {
  Portrait out;
  out.leaf_ = nucleus_index;
  return out;
}

Portrait Portrait::node(Permutation perm, std::vector<Portrait> children) {
  if (children.empty() || children.size() != perm.degree())
    throw Error(ErrorKind::InvalidArgument, "portrait node needs one child per level-1 vertex");
  Portrait out;
  out.perm_ = std::move(perm);
  out.children_ = std::move(children);
  return out;
}

int Portrait::depth() const {
  int deepest = -1;
  for (const Portrait& child : children_) deepest = std::max(deepest, child.depth());
  return deepest + 1;
}

namespace {

Portrait build(WordProblem& problem, const Word& word, int remaining) {
  if (auto index = problem.nucleus_index(word)) return Portrait::leaf(*index);
  if (remaining == 0)
    throw Error(ErrorKind::DepthBudgetExceeded, "portrait deeper than the depth budget; is the group contracting?");
  const GroupSpec& spec = problem.spec();
  std::vector<Portrait> children;
  for (const Word& section : sections(spec, word)) children.push_back(build(problem, section.freely_reduced(), remaining - 1));
  return Portrait::node(root_permutation(spec, word), std::move(children));
}

void put_varint(std::string& out, std::size_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>(0x80 | (value & 0x7f)));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

void write_key(std::string& out, const Portrait& portrait) {
  if (portrait.is_leaf()) {
    out.push_back('L');
    put_varint(out, portrait.nucleus_index());
    return;
  }
  out.push_back('N');
  put_varint(out, portrait.perm().degree());
  for (auto image : portrait.perm().images()) put_varint(out, image);
  for (const Portrait& child : portrait.children()) write_key(out, child);
}

LevelPermutation action(const LevelActions& actions, const Portrait& portrait, int level) {
  const GroupSpec& spec = actions.spec();
  if (portrait.is_leaf()) return actions.of(spec.nucleus()[portrait.nucleus_index()], level);
  if (level == 0) return LevelPermutation::identity(spec.degree(), 0);
  const std::size_t d = spec.degree();
  std::size_t block = 1;
  for (int i = 1; i < level; ++i) block *= d;
  std::vector<std::uint32_t> images(block * d);
  for (std::uint32_t top = 0; top < d; ++top) {
    LevelPermutation below = action(actions, portrait.children()[top], level - 1);
    for (std::size_t rest = 0; rest < block; ++rest)
      images[top * block + rest] =
          static_cast<std::uint32_t>(portrait.perm()(top) * block + below(static_cast<std::uint32_t>(rest)));
  }
  return LevelPermutation(d, level, std::move(images));
}

void write_ascii(std::ostringstream& out, const GroupSpec& spec, const Portrait& portrait, const std::string& vertex,
                 int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << (vertex.empty() ? "root" : vertex) << ": ";
  if (portrait.is_leaf()) {
    out << spec.format(spec.nucleus()[portrait.nucleus_index()]) << '\n';
    return;
  }
  out << portrait.perm().to_cycle_string() << '\n';
  for (std::size_t u = 0; u < portrait.children().size(); ++u)
    write_ascii(out, spec, portrait.children()[u],
                vertex + (spec.degree() > 9 && !vertex.empty() ? "." : "") + std::to_string(u + 1), indent + 1);
}

void write_dot(std::ostringstream& out, const GroupSpec& spec, const Portrait& portrait, const std::string& vertex) {
  const std::string id = "v" + vertex;
  if (portrait.is_leaf()) {
    out << "  " << id << " [shape=box, label=\"" << spec.format(spec.nucleus()[portrait.nucleus_index()]) << "\"];\n";
    return;
  }
  out << "  " << id << " [shape=ellipse, label=\"" << portrait.perm().to_cycle_string() << "\"];\n";
  for (std::size_t u = 0; u < portrait.children().size(); ++u) {
    std::string child = vertex + "_" + std::to_string(u + 1);
    write_dot(out, spec, portrait.children()[u], child);
    out << "  " << id << " -> v" << child << " [label=\"" << u + 1 << "\"];\n";
  }
}

}  // namespace

Portrait build_portrait(WordProblem& problem, const Word& word, int max_depth) {
  if (max_depth < 0) throw Error(ErrorKind::InvalidArgument, "max_depth must be nonnegative");
  return build(problem, word.freely_reduced(), max_depth);
}

Portrait build_portrait(const GroupSpec& spec, const Word& word, int max_depth) {
  WordProblem problem(spec);
  return build_portrait(problem, word, max_depth);
}

int depth(const GroupSpec& spec, const Word& word) { return build_portrait(spec, word).depth(); }

std::string canonical_key(const Portrait& portrait) {
  std::string out;
  write_key(out, portrait);
  return out;
}

LevelPermutation portrait_action(const LevelActions& actions, const Portrait& portrait) {
  return action(actions, portrait, actions.level());
}

std::string render_ascii(const GroupSpec& spec, const Portrait& portrait) {
  std::ostringstream out;
  out << "depth " << portrait.depth() << '\n';
  write_ascii(out, spec, portrait, "", 0);
  return out.str();
}

std::string render_dot(const GroupSpec& spec, const Portrait& portrait) {
  std::ostringstream out;
  out << "digraph portrait {\n";
  out << "  label=\"" << spec.name() << " portrait, depth " << portrait.depth() << "\";\n";
  write_dot(out, spec, portrait, "");
  out << "}\n";
  return out.str();
}

}  // namespace pgrowth
