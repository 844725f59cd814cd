#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace vessiot {

/// Maximum ambient dimension reachable through the text grammar (x1..x9).
inline constexpr int kMaxDimension = 9;

/// A polynomial variable: either a base coordinate x1..x9 or a named
/// parameter. Coordinates order before parameters, by index; parameters order
/// alphabetically. Names are interned, so copies are two words.
class Symbol {
public:
    static Symbol coordinate(int index);
    static Symbol parameter(std::string_view name);

    [[nodiscard]] bool is_coordinate() const noexcept { return coord_ > 0; }
    /// 1-based coordinate index, 0 for parameters.
    [[nodiscard]] int coordinate_index() const noexcept { return coord_; }
    [[nodiscard]] const std::string& name() const noexcept { return *name_; }

    friend bool operator==(const Symbol& a, const Symbol& b) noexcept { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept;

private:
    Symbol(int coord, const std::string* name) : coord_(coord), name_(name) {}

    int coord_;
    const std::string* name_;
};

/// True when `name` has the shape of a coordinate identifier (x1..x9).
[[nodiscard]] bool is_coordinate_name(std::string_view name) noexcept;

}  // namespace vessiot
