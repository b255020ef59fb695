// SPDX-License-Identifier: Apache-2.0
#include "lecedit/shot_kind.hpp"

namespace lecedit {

std::string_view to_string(ShotKind k) {
    switch (k) {
        case ShotKind::LeftBlackboardCloseUp: return "lb";
        case ShotKind::RightBlackboardCloseUp: return "rb";
        case ShotKind::SlideCloseUp: return "sc";
        case ShotKind::StudentLong: return "sl";
        case ShotKind::LeftMedium: return "lm";
        case ShotKind::RightMedium: return "rm";
        case ShotKind::OverviewLong: return "ol";
    }
    return "?";
}

std::optional<ShotKind> shot_kind_from_string(std::string_view code) {
    for (ShotKind k : all_shot_kinds)
        if (to_string(k) == code) return k;
    return std::nullopt;
}

}  // namespace lecedit
