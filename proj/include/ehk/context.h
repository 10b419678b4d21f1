#pragma once

#include <string>
#include <vector>

namespace ehk {

// A Context is the ordered list of generators a Laurent polynomial lives
// over. Instances are interned: the same generator list always yields the
// same Context*, so mixed-context arithmetic is caught by pointer compare.
class Context {
public:
    // The base coefficient field generators {q, t}.
    static const Context* qt();
    // {q, t, e1, ..., er} for rank-r computations.
    static const Context* qte(int rank);
    // Arbitrary generator list (shuffle variables, scratch identities).
    static const Context* make(const std::vector<std::string>& gens);

    int arity() const { return static_cast<int>(gens_.size()); }
    const std::string& name(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return gens_; }
    // Index of a generator name, or -1 if this context has no such generator.
    int index(const std::string& name) const;

private:
    explicit Context(std::vector<std::string> gens) : gens_(std::move(gens)) {}
    std::vector<std::string> gens_;
};

} // namespace ehk
