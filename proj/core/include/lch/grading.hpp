#pragma once

namespace lch {

/// Cusp-edge crossing counts of a capping path plus the Morse index of the height
/// difference at the chord (0, 1 or 2 on a surface).
struct CappingRecord {
    int down_cusps = 0;
    int up_cusps = 0;
    int morse_index = 0;

    /// Throws StructuralError on negative counts or an index outside {0, 1, 2}.
    static CappingRecord make(int down, int up, int index);
    friend bool operator==(const CappingRecord&, const CappingRecord&) = default;
};

/// Maslov number of a loop: downward minus upward cusp crossings.
int maslov_of_loop(int down, int up);

/// Conley-Zehnder index minus one: D - U + index - 1.
int chord_degree(const CappingRecord& r);

/// Capping path followed by a loop with the given crossing counts.
CappingRecord append_loop(const CappingRecord& r, int down, int up);

}  // namespace lch
