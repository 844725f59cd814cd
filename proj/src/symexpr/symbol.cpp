#include "vessiot/symbol.hpp"

#include <array>
#include <mutex>
#include <set>

#include "vessiot/errors.hpp"

namespace vessiot {
namespace {

std::mutex& intern_mutex() {
    static std::mutex m;
    return m;
}

std::set<std::string, std::less<>>& intern_table() {
    static std::set<std::string, std::less<>> table;
    return table;
}

const std::string* intern(std::string_view name) {
    std::lock_guard lock(intern_mutex());
    auto& table = intern_table();
    auto it = table.find(name);
    if (it == table.end()) it = table.emplace(name).first;
    return &*it;
}

const std::array<const std::string*, kMaxDimension>& coordinate_names() {
    static const auto names = [] {
        std::array<const std::string*, kMaxDimension> out{};
        for (int i = 0; i < kMaxDimension; ++i) out[i] = intern("x" + std::to_string(i + 1));
        return out;
    }();
    return names;
}

}  // namespace

Symbol Symbol::coordinate(int index) {
    if (index < 1 || index > kMaxDimension)
        throw IndexOutOfRange("coordinate index " + std::to_string(index) + " outside 1.." +
                              std::to_string(kMaxDimension));
    return Symbol(index, coordinate_names()[index - 1]);
}

Symbol Symbol::parameter(std::string_view name) {
    if (name.empty()) throw InputError("empty parameter name");
    if (is_coordinate_name(name))
        throw InputError("parameter name '" + std::string(name) + "' collides with a coordinate");
    return Symbol(0, intern(name));
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    const bool ca = a.is_coordinate();
    const bool cb = b.is_coordinate();
    if (ca && cb) return a.coord_ <=> b.coord_;
    if (ca != cb) return ca ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.name().compare(b.name()) <=> 0;
}

bool is_coordinate_name(std::string_view name) noexcept {
    return name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9';
}

}  // namespace vessiot
