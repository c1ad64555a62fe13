// Certificates for the two sufficient nonplanarity conditions:
//   (i)  six disjoint connected vertex sets A1..A3, B1..B3 with an edge
//        between every Ai and Bj;
//   (ii) five disjoint connected vertex sets A1..A5 with an edge between
//        every two of them.
// Connectivity is recomputed at verification time, so a certificate stays
// valid under edge additions.

#ifndef BPV_KURATOWSKI_HPP
#define BPV_KURATOWSKI_HPP

#include <vector>

#include "bpv/graph.hpp"

namespace bpv {

enum class CertificateKind { condition_i, condition_ii };

struct KuratowskiCertificate {
  CertificateKind kind;
  std::vector<VertexSet> parts_a;  // 3 for condition_i, 5 for condition_ii
  std::vector<VertexSet> parts_b;  // 3 for condition_i, empty for condition_ii

  friend bool operator==(const KuratowskiCertificate&, const KuratowskiCertificate&) = default;
};

// True iff every part is connected within g and every required cross pair
// has a connecting edge. Throws on structural defects (wrong part counts,
// empty or overlapping parts, members outside g).
bool verify(const Graph& g, const KuratowskiCertificate& c);

// Checks the certificate, then confirms g is in fact nonplanar. Throws if
// the certificate fails verify.
bool certified_nonplanar(const Graph& g, const KuratowskiCertificate& c);

}  // namespace bpv

#endif  // BPV_KURATOWSKI_HPP
