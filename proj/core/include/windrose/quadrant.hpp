#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace windrose {

// Enumerator values follow the clockwise order NW, NE, SE, SW.
enum class Quadrant : std::uint8_t { nw = 0, ne = 1, se = 2, sw = 3 };

inline constexpr Quadrant all_quadrants[4] = {Quadrant::nw, Quadrant::ne, Quadrant::se,
                                              Quadrant::sw};

constexpr int index(Quadrant q) noexcept { return static_cast<int>(q); }

constexpr Quadrant quadrant_from_index(int i) noexcept {
  return static_cast<Quadrant>(((i % 4) + 4) % 4);
}

constexpr Quadrant opposite(Quadrant q) noexcept { return quadrant_from_index(index(q) + 2); }

// Quadrant reached after `steps` clockwise steps.
constexpr Quadrant rotate_cw(Quadrant q, int steps) noexcept {
  return quadrant_from_index(index(q) + steps);
}

// Number of clockwise steps (0..3) from a to b.
constexpr int cw_steps(Quadrant a, Quadrant b) noexcept {
  return ((index(b) - index(a)) % 4 + 4) % 4;
}

// +1 / -1 signs of the open quadrant.
constexpr int x_sign(Quadrant q) noexcept {
  return (q == Quadrant::ne || q == Quadrant::se) ? 1 : -1;
}
constexpr int y_sign(Quadrant q) noexcept {
  return (q == Quadrant::ne || q == Quadrant::nw) ? 1 : -1;
}

constexpr Quadrant quadrant_from_signs(int sx, int sy) noexcept {
  if (sy > 0) return sx > 0 ? Quadrant::ne : Quadrant::nw;
  return sx > 0 ? Quadrant::se : Quadrant::sw;
}

std::string_view to_string(Quadrant q) noexcept;
std::optional<Quadrant> parse_quadrant(std::string_view s) noexcept;

}  // namespace windrose
