from moebius.group import (
    MoebiusMap,
    apply,
    closure,
    compose,
    enumerate_group,
    group_generators,
    inverse,
)
