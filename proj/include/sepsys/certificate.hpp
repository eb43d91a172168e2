#ifndef SEPSYS_CERTIFICATE_HPP
#define SEPSYS_CERTIFICATE_HPP

#include <iosfwd>

#include "sepsys/system.hpp"

namespace sepsys {

// Line-oriented text certificate, versioned, diffable. Vertices are the
// dense ids of the ingested graph; verification re-reads the graph file and
// relies on deterministic ingestion for the id mapping.
struct Certificate {
    int n = 0;
    int m = 0;
    SeparatingSystem system;
};

void write_certificate(std::ostream& out, const Graph& g, const SeparatingSystem& sys);
Certificate read_certificate(std::istream& in);

}  // namespace sepsys

#endif
