// Categorical verdict vocabulary shared by the analysis perspectives, plus
// the relative-tolerance comparator every verdict is phrased in. The strings
// are part of the report schema: do not vary their spelling.
#pragma once

#include <cmath>
#include <string>

namespace retnet {
namespace verdict {

// statistical
inline const std::string equally_distributed = "EquallyDistributed";
inline const std::string unevenly_distributed = "UnevenlyDistributed";
// network composition, global view
inline const std::string base_group = "Base";
inline const std::string maintainer = "Maintainer";
inline const std::string changer = "Changer";
inline const std::string ecosystem_maintainers = "EcosystemMaintainers";
inline const std::string ecosystem_changers = "EcosystemChangers";
// network composition, node view
inline const std::string behave_similarly = "BehaveSimilarly";
inline const std::string behave_differently = "BehaveDifferently";
// robustness
inline const std::string destabilizing = "Destabilizing";
inline const std::string non_destabilizing = "NonDestabilizing";
// influence
inline const std::string influence_similarly = "InfluenceSimilarly";
inline const std::string influence_differently = "InfluenceDifferently";
// structure (k-shell population)
inline const std::string proportionate = "Proportionate";
inline const std::string highly_populated = "HighlyPopulated";
inline const std::string depopulated = "Depopulated";
// temporal
inline const std::string normal = "Normal";
inline const std::string understimulated = "Understimulated";
inline const std::string overstimulated = "Overstimulated";
// virality
inline const std::string discuss_similarly = "DiscussSimilarly";
inline const std::string discuss_differently = "DiscussDifferently";
inline const std::string influencer = "Influencer";
inline const std::string non_influencer = "NonInfluencer";
inline const std::string equally_viral = "EquallyViral";
inline const std::string unevenly_viral = "UnevenlyViral";

} // namespace verdict

// True when `value` lies within a relative band of eps around `baseline`.
// A zero baseline only matches (near-)zero values: there is no meaningful
// relative band around 0.
inline bool within_rel(double value, double baseline, double eps,
                       double zero_tol = 1e-12) {
    if (std::abs(baseline) <= zero_tol) return std::abs(value) <= zero_tol;
    return std::abs(value - baseline) <= eps * std::abs(baseline);
}

// Default relative tolerance used by every comparative verdict.
constexpr double kDefaultEpsilon = 0.10;

} // namespace retnet
