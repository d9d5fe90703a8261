#pragma once
// Internal: the certificate's JSON object, reused when nesting it inside
// report serializations.

#include "jsonw.hpp"
#include "wavelab/certificates.hpp"

namespace wavelab::detail {

jsonw::Obj certificate_obj(const IssCertificate& cert);

}  // namespace wavelab::detail
