#include <gmp.h>

#include <cstdlib>
#include <cstring>
#include <new>

// GMP allocates and frees a huge number of small limb blocks during exact
// arithmetic. Route those through a size-classed freelist that never returns
// memory to the system; larger blocks fall back to malloc. Installed once at
// startup, before any GMP value exists. Single-threaded by design.

namespace {

constexpr size_t kClasses = 4;
constexpr size_t kClassSize[kClasses] = {16, 32, 64, 128};

void* free_list[kClasses] = {};

size_t class_of(size_t n) {
    for (size_t i = 0; i < kClasses; ++i)
        if (n <= kClassSize[i]) return i;
    return kClasses;
}

void* pool_alloc(size_t n) {
    size_t c = class_of(n);
    if (c == kClasses) {
        void* p = std::malloc(n);
        if (!p) throw std::bad_alloc();
        return p;
    }
    if (void* head = free_list[c]) {
        free_list[c] = *static_cast<void**>(head);
        return head;
    }
    // Carve a fresh batch so the malloc cost amortizes.
    constexpr size_t kBatch = 256;
    char* block = static_cast<char*>(std::malloc(kClassSize[c] * kBatch));
    if (!block) throw std::bad_alloc();
    for (size_t i = 1; i + 1 < kBatch; ++i) {
        void** slot = reinterpret_cast<void**>(block + i * kClassSize[c]);
        *slot = block + (i + 1) * kClassSize[c];
    }
    *reinterpret_cast<void**>(block + (kBatch - 1) * kClassSize[c]) = nullptr;
    free_list[c] = block + kClassSize[c];
    return block;
}

void pool_free(void* p, size_t n) {
    size_t c = class_of(n);
    if (c == kClasses) {
        std::free(p);
        return;
    }
    *static_cast<void**>(p) = free_list[c];
    free_list[c] = p;
}

void* gmp_pool_alloc(size_t n) { return pool_alloc(n); }

void* gmp_pool_realloc(void* p, size_t old_n, size_t new_n) {
    size_t co = class_of(old_n), cn = class_of(new_n);
    if (co == kClasses && cn == kClasses) {
        void* q = std::realloc(p, new_n);
        if (!q) throw std::bad_alloc();
        return q;
    }
    if (co == cn) return p;
    void* q = pool_alloc(new_n);
    std::memcpy(q, p, old_n < new_n ? old_n : new_n);
    pool_free(p, old_n);
    return q;
}

void gmp_pool_free(void* p, size_t n) { pool_free(p, n); }

// No other translation unit builds GMP values during static initialization
// (contexts, memo tables and interned operators are all function-local
// statics touched at runtime only), so installing here is safe.
struct InstallPool {
    InstallPool() {
        mp_set_memory_functions(gmp_pool_alloc, gmp_pool_realloc, gmp_pool_free);
    }
};

InstallPool install_pool;

} // namespace
