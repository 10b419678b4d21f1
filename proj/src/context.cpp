#include "ehk/context.h"

#include <map>
#include <memory>
#include <mutex>

#include "ehk/errors.h"

namespace ehk {

namespace {

std::mutex& intern_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::vector<std::string>, std::unique_ptr<Context>>& intern_table() {
    static std::map<std::vector<std::string>, std::unique_ptr<Context>> table;
    return table;
}

} // namespace

const Context* Context::make(const std::vector<std::string>& gens) {
    if (gens.empty()) throw DomainError("context needs at least one generator");
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].empty()) throw DomainError("empty generator name");
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j])
                throw DomainError("duplicate generator name: " + gens[i]);
    }
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto& table = intern_table();
    auto it = table.find(gens);
    if (it == table.end()) {
        std::unique_ptr<Context> ctx(new Context(std::vector<std::string>(gens)));
        it = table.emplace(gens, std::move(ctx)).first;
    }
    return it->second.get();
}

const Context* Context::qt() {
    static const Context* ctx = make({"q", "t"});
    return ctx;
}

const Context* Context::qte(int rank) {
    if (rank < 1) throw DomainError("rank must be positive");
    std::vector<std::string> gens = {"q", "t"};
    for (int i = 1; i <= rank; ++i) gens.push_back("e" + std::to_string(i));
    return make(gens);
}

int Context::index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) return static_cast<int>(i);
    return -1;
}

} // namespace ehk
