#pragma once

#include <map>
#include <string>
#include <vector>

#include "vkh/diagram.hpp"

namespace vkh {

struct CatalogEntry {
    std::string name;
    std::string code;
};

// Bundled diagrams. Every entry parses, validates, and passes the self-check
// suite; the install-time test enforces this.
const std::vector<CatalogEntry>& builtinCatalog();

// Closure of the 2-strand virtual braid v s^{2n} (v the virtual generator, s
// the positive classical generator); n = 1 is the virtual trefoil.
VirtualLinkDiagram vSigmaClosure(int n);

// Lookup order: user catalog (if any), then builtin, then vsigma<k> names.
VirtualLinkDiagram catalogLookup(const std::string& name,
                                 const std::map<std::string, std::string>& userCatalog = {});

// "name: code" per line; blank lines and lines starting with '#' skipped.
std::map<std::string, std::string> loadCatalogFile(const std::string& path);

} // namespace vkh
