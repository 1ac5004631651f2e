#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace lch {

/// Interned generator name. Cheap to copy; equality is identity.
///
/// Symbols order "naturally": alphabetic prefix first, then the numeric
/// suffix as an integer, so x2 < x10 and a < b.
class Symbol {
public:
    struct Entry {
        std::string name;
        std::string prefix;
        long number = -1;
    };

    Symbol() = default;
    explicit Symbol(std::string_view name);

    std::string_view name() const { return entry_ ? std::string_view(entry_->name) : std::string_view(); }
    bool valid() const { return entry_ != nullptr; }
    const Entry* entry() const { return entry_; }

    friend bool operator==(Symbol a, Symbol b) { return a.entry_ == b.entry_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b);

private:
    const Entry* entry_ = nullptr;
};

}  // namespace lch

template <>
struct std::hash<lch::Symbol> {
    std::size_t operator()(lch::Symbol s) const noexcept
    {
        return std::hash<const void*>{}(s.entry());
    }
};
