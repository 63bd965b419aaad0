#pragma once

// Exhaustive desk-scale verification suites and the catalogs of rectangle sequences they run on.

#include <string>
#include <utility>
#include <vector>

#include "gkostka/lrwords.hpp"
#include "gkostka/report.hpp"

namespace gkostka {

/// Every ordered sequence of 1..max_rects rectangles with at most max_cells cells in total.
[[nodiscard]] std::vector<RectSeq> all_sequences(int max_cells, int max_rects);
[[nodiscard]] std::vector<RectSeq> dominant_sequences(int max_cells, int max_rects);
/// R_j contains R_{j+1} for all j.
[[nodiscard]] std::vector<RectSeq> nested_sequences(int max_cells);
/// Pairs R >= R', R != R', R dominant; R' dominant or the reversal of a dominant sequence.
[[nodiscard]] std::vector<std::pair<RectSeq, RectSeq>> comparable_pairs(int max_cells, int max_rects);

struct SuiteResult {
  std::string suite;
  std::vector<PropertyReport> reports;
  [[nodiscard]] bool ok() const;
};

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws InvalidInput for an unknown name.
[[nodiscard]] SuiteResult run_suite(const std::string& name, int max_cells);

// Individual suites.
[[nodiscard]] SuiteResult verify_charge_comp(int max_cells, int max_rects = 3);
[[nodiscard]] SuiteResult verify_embedding_thm(int max_cells, int max_rects = 8);
[[nodiscard]] SuiteResult verify_rect_mono(int max_cells, int max_rects = 8);
[[nodiscard]] SuiteResult verify_embed_image(int max_cells, int max_rects = 8);
[[nodiscard]] SuiteResult verify_atom_thm(int max_cells);
[[nodiscard]] SuiteResult verify_poset_transpose(int max_cells, int max_rects = 8);
[[nodiscard]] SuiteResult verify_poly_transpose(int max_cells, int max_rects = 8);
[[nodiscard]] SuiteResult verify_kostka(int max_size);
[[nodiscard]] SuiteResult verify_lr_oracle(int max_cells, int max_rects = 8);
[[nodiscard]] SuiteResult verify_std_props(int max_cells, int max_std = 6);
[[nodiscard]] SuiteResult verify_atom_conjecture(int max_cells);

}  // namespace gkostka
