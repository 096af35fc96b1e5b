#include "catalog_build.hpp"

namespace wxz {

const Catalog& Catalog::builtin() {
    static const Catalog cat = [] {
        Catalog c;
        detail::add_families_and_sets(c);
        detail::add_wxx_entries(c);
        detail::add_xxz_entries(c);
        detail::add_wxz_entries(c);
        return c;
    }();
    return cat;
}

} // namespace wxz
