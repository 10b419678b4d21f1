#include "ehk/partition.h"

#include <algorithm>
#include <sstream>

#include "ehk/errors.h"

namespace ehk {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

void require_partition(const Partition& p) {
    if (!is_partition(p))
        throw DomainError("not a partition: " + p_to_string(p));
}

int p_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

Partition p_conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(static_cast<size_t>(p[0]), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[static_cast<size_t>(j)];
    return c;
}

bool p_contains(const Partition& big, const Partition& small) {
    if (small.size() > big.size()) return false;
    for (size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

int p_nstat(const Partition& p) {
    int n = 0;
    for (size_t i = 0; i < p.size(); ++i) n += static_cast<int>(i) * p[i];
    return n;
}

bool p_dominates(const Partition& a, const Partition& b) {
    if (p_weight(a) != p_weight(b)) return false;
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

int p_part(const Partition& p, int i) {
    if (i < 1) throw DomainError("row index must be positive");
    return i <= static_cast<int>(p.size()) ? p[static_cast<size_t>(i - 1)] : 0;
}

int p_arm(const Partition& p, int i, int j) { return p_part(p, i) - j; }

int p_leg(const Partition& p, int i, int j) { return p_part(p_conjugate(p), j) - i; }

std::vector<Cell> p_cells(const Partition& p) {
    std::vector<Cell> out;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 1; j <= p[i]; ++j) out.emplace_back(static_cast<int>(i + 1), j);
    return out;
}

std::vector<Cell> p_removable(const Partition& p) {
    // Walking rows bottom-up gives increasing column order.
    std::vector<Cell> out;
    for (size_t k = p.size(); k > 0; --k) {
        size_t i = k - 1;
        bool row_end_exposed = i + 1 == p.size() || p[i + 1] < p[i];
        if (row_end_exposed) out.emplace_back(static_cast<int>(i + 1), p[i]);
    }
    return out;
}

std::vector<Cell> p_addable(const Partition& p) {
    std::vector<Cell> out;
    for (size_t k = p.size() + 1; k > 0; --k) {
        size_t i = k - 1;
        int len = i < p.size() ? p[i] : 0;
        int above = i == 0 ? len + 1 : p[i - 1];
        if (len < above) out.emplace_back(static_cast<int>(i + 1), len + 1);
    }
    return out;
}

Partition p_add_cell(const Partition& p, const Cell& c) {
    Partition out = p;
    if (c.first == static_cast<int>(p.size()) + 1) out.push_back(0);
    if (c.first < 1 || c.first > static_cast<int>(out.size()) ||
        out[static_cast<size_t>(c.first - 1)] + 1 != c.second)
        throw DomainError("cell is not addable");
    ++out[static_cast<size_t>(c.first - 1)];
    if (!is_partition(out)) throw DomainError("cell is not addable");
    return out;
}

Partition p_remove_cell(const Partition& p, const Cell& c) {
    if (c.first < 1 || c.first > static_cast<int>(p.size()) ||
        p[static_cast<size_t>(c.first - 1)] != c.second)
        throw DomainError("cell is not removable");
    Partition out = p;
    --out[static_cast<size_t>(c.first - 1)];
    if (out[static_cast<size_t>(c.first - 1)] == 0) out.erase(out.begin() + (c.first - 1));
    if (!is_partition(out)) throw DomainError("cell is not removable");
    return out;
}

Cell p_cell_diff(const Partition& big, const Partition& small) {
    if (p_weight(big) != p_weight(small) + 1 || !p_contains(big, small))
        throw DomainError("diagrams do not differ by one box");
    for (size_t i = 0; i < big.size(); ++i) {
        int below = i < small.size() ? small[i] : 0;
        if (big[i] != below) return Cell(static_cast<int>(i + 1), big[i]);
    }
    throw DomainError("diagrams do not differ by one box");
}

std::vector<Cell> p_skew_cells(const Partition& big, const Partition& small) {
    if (!p_contains(big, small)) throw DomainError("skew cells need containment");
    std::vector<Cell> out;
    for (size_t i = 0; i < big.size(); ++i) {
        int from = i < small.size() ? small[i] : 0;
        for (int j = from + 1; j <= big[i]; ++j) out.emplace_back(static_cast<int>(i + 1), j);
    }
    return out;
}

namespace {

void gen_partitions(int n, int cap, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(cap, n); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions of negative weight");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::string p_to_string(const Partition& p) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ',';
        out << p[i];
    }
    out << ')';
    return out.str();
}

Partition parse_partition(const std::string& text) {
    std::string body = text;
    size_t b = body.find_first_not_of(" \t");
    size_t e = body.find_last_not_of(" \t");
    body = b == std::string::npos ? "" : body.substr(b, e - b + 1);
    if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
        char close = body.front() == '(' ? ')' : ']';
        if (body.back() != close) throw ParseError("unbalanced partition brackets", text.size());
        body = body.substr(1, body.size() - 2);
    }
    Partition p;
    std::istringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        size_t pb = piece.find_first_not_of(" \t");
        if (pb == std::string::npos) continue;
        size_t pe = piece.find_last_not_of(" \t");
        piece = piece.substr(pb, pe - pb + 1);
        try {
            size_t used = 0;
            int part = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            p.push_back(part);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + piece + "'", 0);
        }
    }
    if (!is_partition(p)) throw ParseError("parts must be weakly decreasing and positive", 0);
    return p;
}

int mp_weight(const MultiPartition& m) {
    int w = 0;
    for (const Partition& p : m) w += p_weight(p);
    return w;
}

std::vector<MultiPartition> multipartitions_of(int n, int components) {
    if (components < 1) throw DomainError("need at least one component");
    std::vector<MultiPartition> out;
    if (components == 1) {
        for (Partition& p : partitions_of(n)) out.push_back({std::move(p)});
        return out;
    }
    for (int k = n; k >= 0; --k) {
        std::vector<Partition> heads = partitions_of(k);
        std::vector<MultiPartition> tails = multipartitions_of(n - k, components - 1);
        for (const Partition& h : heads)
            for (const MultiPartition& t : tails) {
                MultiPartition m;
                m.reserve(static_cast<size_t>(components));
                m.push_back(h);
                m.insert(m.end(), t.begin(), t.end());
                out.push_back(std::move(m));
            }
    }
    return out;
}

std::string mp_to_string(const MultiPartition& m) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out << ';';
        out << p_to_string(m[i]);
    }
    out << ']';
    return out.str();
}

} // namespace ehk
