"""
Degree regions, evidence, certificates and the ping-pong certifiers.
"""

from .regions import Region, region_member
from .evidence import Evidence, parse_evidence
from .certificate import Certificate, Verdict, check_certificate_text
from .pingpong import (NormalFormB4a, NormalFormB4b, PeriodicForm, PseudoAnosovB3,
                       ReducibleB3, action_table, central_twist_holds, certify_b3,
                       certify_periodic, certify_reducible_a, certify_reducible_b)

__all__ = [
    'Region', 'region_member',
    'Evidence', 'parse_evidence',
    'Certificate', 'Verdict', 'check_certificate_text',
    'NormalFormB4a', 'NormalFormB4b', 'PeriodicForm', 'PseudoAnosovB3',
    'ReducibleB3', 'action_table', 'central_twist_holds', 'certify_b3',
    'certify_periodic', 'certify_reducible_a', 'certify_reducible_b',
]
