#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sphere_dubins/segments.hpp"
#include "sphere_dubins/so3.hpp"

namespace sphere_dubins {

/// The twelve candidate path words, in tie-break order.
enum class PathFamily {
  LGL,
  RGR,
  LGR,
  RGL,
  LRL,
  RLR,
  LRpiL,
  RLpiR,
  LRLR,
  RLRL,
  LRLRL,
  RLRLR,
};

inline constexpr std::array<PathFamily, 12> kAllFamilies = {
    PathFamily::LGL,   PathFamily::RGR,   PathFamily::LGR,  PathFamily::RGL,
    PathFamily::LRL,   PathFamily::RLR,   PathFamily::LRpiL, PathFamily::RLpiR,
    PathFamily::LRLR,  PathFamily::RLRL,  PathFamily::LRLRL, PathFamily::RLRLR,
};

inline constexpr std::string_view family_name(PathFamily family)
{
  constexpr std::array<std::string_view, 12> names = {"LGL",   "RGR",   "LGR",  "RGL",  "LRL",   "RLR",
                                                      "LRpiL", "RLpiR", "LRLR", "RLRL", "LRLRL", "RLRLR"};
  return names[static_cast<std::size_t>(family)];
}

inline std::optional<PathFamily> parse_family(std::string_view name)
{
  for (PathFamily f : kAllFamilies) {
    if (family_name(f) == name) {
      return f;
    }
  }
  return std::nullopt;
}

/// L <-> R exchange (reflection about the XY plane).
inline constexpr PathFamily mirror_family(PathFamily family)
{
  const auto idx = static_cast<int>(family);
  return static_cast<PathFamily>(idx % 2 == 0 ? idx + 1 : idx - 1);
}

/**
 * @brief Arc angles of a three-parameter path.
 *
 * For the CCCC and CCCCC families phi2 is shared by every interior segment;
 * for LRpiL / RLpiR it is pi.
 */
template <typename Scalar>
struct AngleTriple
{
  Scalar phi1 = Scalar(0);
  Scalar phi2 = Scalar(0);
  Scalar phi3 = Scalar(0);

  auto operator<=>(const AngleTriple&) const = default;
};

template <typename Scalar>
struct SolverTolerances
{
  Scalar clamp_eps = Scalar(1e-10);       ///< tolerated |cos| overshoot past 1
  Scalar residual_tol = Scalar(1e-9);     ///< Frobenius acceptance of a candidate
  Scalar degenerate_eps = Scalar(1e-9);   ///< special-case routing threshold

  void validate() const
  {
    if (!(clamp_eps > Scalar(0) && residual_tol > Scalar(0) && degenerate_eps > Scalar(0))) {
      throw std::invalid_argument("solver tolerances must be strictly positive");
    }
    if (!(clamp_eps < Scalar(1e-6))) {
      throw std::invalid_argument("clamp_eps must be below 1e-6");
    }
  }
};

struct SegmentSlot
{
  SegmentKind kind;
  int angle_index;  ///< 0 -> phi1, 1 -> phi2, 2 -> phi3
};

/// Ordered segments of a family and which triple component drives each.
inline std::vector<SegmentSlot> segment_word(PathFamily family)
{
  using K = SegmentKind;
  const K L = K::LeftTurn;
  const K R = K::RightTurn;
  const K G = K::GreatCircle;
  switch (family) {
    case PathFamily::LGL: return {{L, 0}, {G, 1}, {L, 2}};
    case PathFamily::RGR: return {{R, 0}, {G, 1}, {R, 2}};
    case PathFamily::LGR: return {{L, 0}, {G, 1}, {R, 2}};
    case PathFamily::RGL: return {{R, 0}, {G, 1}, {L, 2}};
    case PathFamily::LRL:
    case PathFamily::LRpiL: return {{L, 0}, {R, 1}, {L, 2}};
    case PathFamily::RLR:
    case PathFamily::RLpiR: return {{R, 0}, {L, 1}, {R, 2}};
    case PathFamily::LRLR: return {{L, 0}, {R, 1}, {L, 1}, {R, 2}};
    case PathFamily::RLRL: return {{R, 0}, {L, 1}, {R, 1}, {L, 2}};
    case PathFamily::LRLRL: return {{L, 0}, {R, 1}, {L, 1}, {R, 1}, {L, 2}};
    case PathFamily::RLRLR: return {{R, 0}, {L, 1}, {R, 1}, {L, 1}, {R, 2}};
  }
  throw std::logic_error("segment_word: unknown family");
}

template <typename Scalar>
Scalar slot_angle(const AngleTriple<Scalar>& angles, int index)
{
  return index == 0 ? angles.phi1 : (index == 1 ? angles.phi2 : angles.phi3);
}

/// Forward composition of the family's segment matrices.
template <typename Scalar>
Matrix3<Scalar> compose_path(PathFamily family, const AngleTriple<Scalar>& angles, Scalar r)
{
  Matrix3<Scalar> net = Matrix3<Scalar>::Identity();
  for (const SegmentSlot& slot : segment_word(family)) {
    net = net * segment_rotation(slot.kind, r, slot_angle(angles, slot.angle_index));
  }
  return net;
}

/// Total arc length; interior angles count once per segment that uses them.
template <typename Scalar>
Scalar path_length(PathFamily family, const AngleTriple<Scalar>& angles, Scalar r)
{
  Scalar total = Scalar(0);
  for (const SegmentSlot& slot : segment_word(family)) {
    total += segment_length(slot.kind, r, slot_angle(angles, slot.angle_index));
  }
  return total;
}

}  // namespace sphere_dubins
