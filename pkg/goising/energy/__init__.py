from .params import (
    ParameterSet,
    ParameterError,
    load_params,
    parse_params,
    dump_params,
)
from .ising import (
    StoneValue,
    InteractionSet,
    EnergyReport,
    stone_value,
    corridor,
    interaction_coefficient,
    interaction_set,
    hamiltonian,
    color_strength,
)
