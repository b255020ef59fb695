// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace lecedit {

/// The seven shot types of the multi-camera classroom setup. The short
/// codes ("lb", "rb", ...) are the canonical names used in all file formats.
enum class ShotKind {
    LeftBlackboardCloseUp,   // lb
    RightBlackboardCloseUp,  // rb
    SlideCloseUp,            // sc
    StudentLong,             // sl
    LeftMedium,              // lm
    RightMedium,             // rm
    OverviewLong,            // ol
};

inline constexpr std::size_t kShotKindCount = 7;

inline constexpr std::array<ShotKind, kShotKindCount> all_shot_kinds = {
    ShotKind::LeftBlackboardCloseUp,  ShotKind::RightBlackboardCloseUp,
    ShotKind::SlideCloseUp,           ShotKind::StudentLong,
    ShotKind::LeftMedium,             ShotKind::RightMedium,
    ShotKind::OverviewLong,
};

constexpr std::size_t index_of(ShotKind k) { return static_cast<std::size_t>(k); }

std::string_view to_string(ShotKind k);
std::optional<ShotKind> shot_kind_from_string(std::string_view code);

constexpr bool is_close_up(ShotKind k) {
    return k == ShotKind::LeftBlackboardCloseUp || k == ShotKind::RightBlackboardCloseUp ||
           k == ShotKind::SlideCloseUp;
}

}  // namespace lecedit
