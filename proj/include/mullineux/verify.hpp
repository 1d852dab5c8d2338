#pragma once

#include <string>
#include <vector>

#include "mullineux/json_io.hpp"

namespace mlx {

/// Outcome of one exhaustive suite: per-property pass/fail counts and the
/// first counterexample seen, if any.
struct VerificationReport {
    struct Property {
        std::string name;
        long long pass = 0;
        long long fail = 0;
        std::string first_counterexample;
    };

    std::string suite;
    std::vector<int> ps;
    int nmax = 0;
    std::vector<Property> properties;

    bool ok() const;
    Property& property(const std::string& name);
};

json to_json(const VerificationReport& report);

/// Fidelity of the two fully worked small cases: the 5-residue diagram and
/// 5-content of (6^2,5,4), and the node sequence of (12,7^2,5^3,3,1^3) with
/// its normal entries and heights.
VerificationReport verify_worked_examples();

/// Peaks of the Mullineux and node sequences agree for every residue, the
/// residues carrying normal (good) entries agree across both sequences and
/// the block analysis, and the (residue, height) multisets match.
VerificationReport verify_peaks(const std::vector<int>& ps, int nmax);

/// The three JS criteria agree: exactly one normal block, the consecutive
/// block congruences, and the prefix bound on the Mullineux sequence; the
/// good node residue equals the type.
VerificationReport verify_js_equivalence(const std::vector<int>& ps, int nmax);

/// The residue symbols of JS partitions of each type are exactly the symbols
/// generated by the construction graph, prefixes included, and every symbol's
/// end value vector classifies with the admissible final y entry.
VerificationReport verify_construction(const std::vector<int>& ps, int nmax);

/// Every JS partition has an empty or rectangular core of its type, agreeing
/// with the final-column table, the length rule, and the rectangle n-vector;
/// dropping singular columns leaves a chain of regular extensions.
VerificationReport verify_core_theorems(const std::vector<int>& ps, int nmax);

/// The labeled-path weight formula reproduces the weight of every JS
/// partition; the d label of an edge matches the observed p-level jump from
/// every partition realizing that edge.
VerificationReport verify_weight_formula(const std::vector<int>& ps, int nmax);

/// Symbol round-trips, the Mullineux involution, commutation of the two map
/// forms, n-vectors from residue symbols, and symbol validity windows.
VerificationReport verify_roundtrip(const std::vector<int>& ps, int nmax);

/// Fixed points: the fixed-JS set equals the restricted-graph language, all
/// are type 0 with square or empty cores per the final-column table, weights
/// of fixed partitions are even, witnesses exist for all even weights up to
/// wmax except the single impossible case, which an exhaustive search
/// confirms.
VerificationReport verify_fixed_points(const std::vector<int>& ps, int nmax, int wmax);

/// Witness partitions for every rectangular p-core and weight up to wmax
/// pass the JS check with the requested core and weight.
VerificationReport verify_js_witnesses(const std::vector<int>& ps, int wmax);

}  // namespace mlx
