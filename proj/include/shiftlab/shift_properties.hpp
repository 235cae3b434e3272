#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/fp.hpp"

namespace shiftlab {

enum class ItemStatus { Pass, Fail, Skipped };

const char* to_string(ItemStatus status);

struct PropertyItem {
  std::string id;       // "1" .. "8", "corollary", "comb", "seeds"
  std::string summary;
  ItemStatus status = ItemStatus::Skipped;
  std::string detail;   // first failure, if any
};

struct ShiftPropertyReport {
  std::vector<PropertyItem> items;
  std::optional<Complex> shifted;  // consensus shift of the complex
  std::optional<SetFamily> shifted_family;
  bool seeds_agree = true;

  bool all_passed() const;
  const PropertyItem& item(const std::string& id) const;
};

// Checks the algebraic-shifting facts on `complex` (and on `family`, a uniform family of
// faces, when given) for every seed, plus cross-seed agreement of the shifted objects.
// Items whose hypotheses do not apply on this input are reported as Skipped.
ShiftPropertyReport verify_shift_properties(const Complex& complex, const std::optional<SetFamily>& family,
                                            const std::vector<std::uint64_t>& seeds, PrimeField field = PrimeField());

// f-vectors of the complexes reached by applying, for each letter of `word`, the link
// ('L') or deletion ('D') at prefix[i].
std::vector<std::size_t> prefix_word_f_vector(const Complex& complex, const VertexPrefix& prefix, const std::string& word);

}  // namespace shiftlab
