# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Degrees of T-equivariant line bundles on invariant curves.

For the curve C joining wP and s_alpha wP, the degree of L(lambda) on C is
<lambda, beta^vee> with beta the positive root among +-w^{-1}alpha. At the lower
endpoint w^{-1}alpha is positive, so the degree is <w(lambda), alpha^vee> there.
"""

from flag_positivity.exceptions import UsageError


def signed_pairing(weight, curve, endpoint=None):
    """<w(lambda), alpha^vee> with w the representative of an endpoint (lower one by default).

    The two endpoints give values of opposite sign.
    """
    endpoint = curve.source if endpoint is None else endpoint
    if endpoint not in curve.endpoints:
        raise UsageError(f"{endpoint} is not an endpoint of curve {curve.index}")
    rs = endpoint.rep.root_system
    if weight.cartan != rs.cartan:
        raise UsageError(f"{weight} is a weight of {weight.cartan}, not {rs.cartan}")
    return rs.pair(endpoint.rep.act(weight), curve.root)


def line_degree(weight, curve):
    """Degree of L(lambda) on an invariant curve; |<w(lambda), alpha^vee>| for nef lambda"""
    parabolic = curve.source.parabolic
    if weight.cartan == parabolic.cartan and not parabolic.is_character(weight):
        raise UsageError(f"{weight} does not define a line bundle on {parabolic}")
    return signed_pairing(weight, curve, curve.source)
