#pragma once

#include <cstddef>
#include <string>

namespace nestbraid {

/// Size limits for the exhaustive computations. Defaults can be overridden
/// from a key = value config file (see load_caps).
struct Caps {
  std::size_t max_group_order = 100000;
  std::size_t max_closure = 20000;
  std::size_t max_building = 5000;
  std::size_t max_nested = 2000000;
  /// Lines per subspace for the bipartition irreducibility search.
  std::size_t max_bipartition_lines = 18;
  std::size_t fuzz_word_length = 20;
  std::size_t fuzz_trials = 1000;
  /// Group elements tried when searching for a conjugating element.
  std::size_t max_conjugation_search = 100000;
};

/// Reads `key = value` lines; '#' starts a comment. Unknown keys and
/// malformed numbers throw InvalidInput.
Caps load_caps(const std::string& path, Caps base = {});
Caps parse_caps(const std::string& text, Caps base = {});

}  // namespace nestbraid
