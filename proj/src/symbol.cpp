#include "lch/symbol.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace lch {

namespace {

struct Interner {
    std::mutex mutex;
    std::unordered_map<std::string, std::unique_ptr<Symbol::Entry>> table;
};

Interner& interner()
{
    static Interner instance;
    return instance;
}

}  // namespace

Symbol::Symbol(std::string_view name)
{
    auto& in = interner();
    std::lock_guard lock(in.mutex);
    auto it = in.table.find(std::string(name));
    if (it == in.table.end()) {
        auto e = std::make_unique<Entry>();
        e->name = std::string(name);
        std::size_t cut = e->name.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(e->name[cut - 1])))
            --cut;
        e->prefix = e->name.substr(0, cut);
        if (cut < e->name.size() && e->name.size() - cut < 18)
            e->number = std::stol(e->name.substr(cut));
        else
            e->prefix = e->name;
        it = in.table.emplace(e->name, std::move(e)).first;
    }
    entry_ = it->second.get();
}

std::strong_ordering operator<=>(Symbol a, Symbol b)
{
    if (a.entry_ == b.entry_)
        return std::strong_ordering::equal;
    if (!a.entry_)
        return std::strong_ordering::less;
    if (!b.entry_)
        return std::strong_ordering::greater;
    if (auto c = a.entry_->prefix <=> b.entry_->prefix; c != 0)
        return c;
    if (auto c = a.entry_->number <=> b.entry_->number; c != 0)
        return c;
    return a.entry_->name <=> b.entry_->name;
}

}  // namespace lch
