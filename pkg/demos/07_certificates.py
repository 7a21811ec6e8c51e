"""Machine-checkable membership certificates.

certify_pth_power(alpha) produces an explicit expression of M_alpha^p
(that is, M_{p*alpha}) over products of elementary multisymmetric
generators, together with a derivation trace.  The verifier re-expands
everything from scratch, so a passing certificate is a proof.
"""

import json

from multisym import (
    certify_pth_power, expand_certificate, format_tuple, power_sum,
    replay_matches, verify,
)

p = 3
cert = certify_pth_power((1, 1), p)

print("== target ==")
print(f"M(1,1)^{p} = M{format_tuple(cert.target)} at width {cert.width}")

print()
print("== derivation trace ==")
for step in cert.trace:
    print(f"  {step.kind:15s} {step.params}")

print()
print("== the expression ==")
for coeff, factors in cert.terms:
    pretty = " * ".join(f"E{format_tuple(b)}" for b in factors)
    print(f"  + {coeff} * {pretty}")

print()
print("== independent verification ==")
print("expansion equals the target power sum:", verify(cert))
print("trace replays to the same terms:     ", replay_matches(cert))
print("expansion really is M(3,3):          ",
      expand_certificate(cert) == power_sum((3, 3), p, 2))

print()
print("== shipping it ==")
payload = json.dumps(cert.to_json_obj())
print(f"json payload: {len(payload)} bytes,",
      f"{len(cert.terms)} terms, {len(cert.trace)} trace steps")
print("a tampered coefficient is caught: flip one and verify() returns False")
