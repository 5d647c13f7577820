#include "pgrowth/branch_tables.h"

namespace pgrowth {

BranchSetup grigorchuk_branch_setup() {
  return {{"a^-1b^-1ab"},
          3,
          16,
          {"1", "d", "ada", "dada", "a", "ad", "da", "dad", "b", "c", "aca", "cada", "ba", "ac", "ca", "cad"},
          {"1", "abab", "(abab)^2", "baba"}};
}

std::vector<DecompositionRow> grigorchuk_decompositions() {
  const std::string id = "()";
  return {
      {"1", {"1", "1"}, id, "1"},
      {"abab", {"ca", "ac"}, id, "1"},
      {"(abab)^2", {"dada", "dada"}, id, "1"},
      {"baba", {"ac", "ca"}, id, "1"},
      {"c", {"a", "d"}, id, "c"},
      {"cabab", {"aca", "cad"}, id, "c"},
      {"c(abab)^2", {"dad", "ada"}, id, "c"},
      {"cbaba", {"c", "ba"}, id, "c"},
      {"dada", {"b", "b"}, id, "dada"},
      {"dadaabab", {"da", "ad"}, id, "dada"},
      {"dada(abab)^2", {"cada", "cada"}, id, "dada"},
      {"dadababa", {"ad", "da"}, id, "dada"},
      {"b", {"a", "c"}, id, "b"},
      {"babab", {"aca", "dad"}, id, "b"},
      {"b(abab)^2", {"dad", "aca"}, id, "b"},
      {"bbaba", {"c", "a"}, id, "b"},
      {"d", {"1", "b"}, id, "d"},
      {"dabab", {"ca", "ad"}, id, "d"},
      {"d(abab)^2", {"dada", "cada"}, id, "d"},
      {"dbaba", {"ac", "da"}, id, "d"},
      {"cada", {"ba", "d"}, id, "cada"},
      {"cadaabab", {"ada", "cad"}, id, "cada"},
      {"cada(abab)^2", {"cad", "ada"}, id, "cada"},
      {"cadababa", {"d", "ba"}, id, "cada"},
  };
}

BranchSetup ggs_branch_setup(int p) {
  BranchSetup setup{{"a^-1b^-1ab"}, 2, static_cast<std::size_t>(p) * static_cast<std::size_t>(p), {}, {}};
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      std::string word;
      if (i) word += "a^" + std::to_string(i);
      if (j) word += "b^" + std::to_string(j);
      setup.transversal.push_back(word.empty() ? "1" : word);
    }
  return setup;
}

BranchSetup apollonian_branch_setup() {
  return {{"xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz"},
          1,
          2,
          {"1", "x"},
          {"1", "yx", "(yx)^2", "x^2", "y^2", "z^2", "x^2yx", "y^3x", "z^2yx", "x^2(yx)^2", "y^2(yx)^2",
           "z^2(yx)^2"}};
}

std::vector<DecompositionRow> apollonian_decompositions() {
  return {
      {"1", {"1", "1", "1"}, "()", "1"},
      {"yx", {"x", "y", "1"}, "(1 3 2)", "1"},
      {"(yx)^2", {"x", "yx", "y"}, "(1 2 3)", "1"},
      {"x^2", {"y", "y", "1"}, "()", "1"},
      {"y^2", {"x", "1", "x"}, "()", "1"},
      {"z^2", {"1", "z", "z"}, "()", "1"},
      {"x^2yx", {"yx", "y^2", "1"}, "(1 3 2)", "1"},
      {"y^3x", {"x^2", "y", "x"}, "(1 3 2)", "1"},
      {"z^2yx", {"x", "zy", "z"}, "(1 3 2)", "1"},
      {"x^2(yx)^2", {"yx", "y^2x", "y"}, "(1 2 3)", "1"},
      {"y^2(yx)^2", {"x^2", "yx", "xy"}, "(1 2 3)", "1"},
      {"z^2(yx)^2", {"x", "zyx", "zy"}, "(1 2 3)", "1"},
      {"x", {"1", "y", "1"}, "(1 2)", "x"},
      {"xyx", {"y", "yx", "1"}, "(2 3)", "x"},
      {"x(yx)^2", {"yx", "yx", "y"}, "(1 3)", "x"},
      {"x^3", {"y", "y^2", "1"}, "(1 2)", "x"},
      {"xy^2", {"1", "yx", "x"}, "(1 2)", "x"},
      {"xz^2", {"z", "y", "z"}, "(1 2)", "x"},
      {"x^3yx", {"y^2", "y^2x", "1"}, "(2 3)", "x"},
      {"xy^3x", {"y", "yx^2", "x"}, "(2 3)", "x"},
      {"xz^2yx", {"zy", "yx", "z"}, "(2 3)", "x"},
      {"x^3(yx)^2", {"y^2x", "y^2x", "y"}, "(1 3)", "x"},
      {"xy^2(yx)^2", {"yx", "yx^2", "xy"}, "(1 3)", "x"},
      {"xz^2(yx)^2", {"zyx", "yx", "zy"}, "(1 3)", "x"},
  };
}

}  // namespace pgrowth
