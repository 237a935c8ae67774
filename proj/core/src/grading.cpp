#include "lch/grading.hpp"

#include <string>

#include "lch/errors.hpp"

namespace lch {

CappingRecord CappingRecord::make(int down, int up, int index)
{
    if (down < 0 || up < 0)
        throw StructuralError("cusp crossing counts must be non-negative");
    if (index < 0 || index > 2)
        throw StructuralError("Morse index " + std::to_string(index) + " is not in {0, 1, 2}");
    return {down, up, index};
}

int maslov_of_loop(int down, int up) { return down - up; }

int chord_degree(const CappingRecord& r) { return maslov_of_loop(r.down_cusps, r.up_cusps) + r.morse_index - 1; }

CappingRecord append_loop(const CappingRecord& r, int down, int up)
{
    return CappingRecord::make(r.down_cusps + down, r.up_cusps + up, r.morse_index);
}

}  // namespace lch
