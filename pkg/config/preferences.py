from enum import Enum
from typing import Tuple, Union

from decouple import config as env_vars
from pydantic import BaseModel


class AppPreferencesDataTypes(str, Enum):
    INT = "int"
    FLOAT = "float"

    def to_type(self):
        return int if self == AppPreferencesDataTypes.INT else float


class AppPrefenrencesCategories(str, Enum):
    TRACE = "TRACE"
    FLOAT_LAB = "FLOAT_LAB"
    BENCHMARK = "BENCHMARK"
    VALIDATION = "VALIDATION"
    KEYGEN = "KEYGEN"


class PreferencesStruct(BaseModel):
    name: str
    type: AppPreferencesDataTypes
    default: Union[int, float]
    category: AppPrefenrencesCategories

    class Config:
        smart_union = True

    @property
    def env_name(self) -> str:
        return f"MODINV_{self.name.upper()}"


APP_PREFERENCES: Tuple[PreferencesStruct] = (
    # TRACE CONFIGURATIONS
    PreferencesStruct(
        name="trace_max_rows",
        type=AppPreferencesDataTypes.INT,
        default=1_000_000,
        category=AppPrefenrencesCategories.TRACE,
    ),
    # FLOAT LAB CONFIGURATIONS
    PreferencesStruct(
        name="float_epsilon",
        type=AppPreferencesDataTypes.FLOAT,
        default=1e-9,
        category=AppPrefenrencesCategories.FLOAT_LAB,
    ),
    PreferencesStruct(
        name="scan_workers",
        type=AppPreferencesDataTypes.INT,
        default=4,
        category=AppPrefenrencesCategories.FLOAT_LAB,
    ),
    PreferencesStruct(
        name="witness_cap",
        type=AppPreferencesDataTypes.INT,
        default=1000,
        category=AppPrefenrencesCategories.FLOAT_LAB,
    ),
    # BENCHMARK CONFIGURATIONS
    PreferencesStruct(
        name="bench_repetitions",
        type=AppPreferencesDataTypes.INT,
        default=5,
        category=AppPrefenrencesCategories.BENCHMARK,
    ),
    PreferencesStruct(
        name="bench_workers",
        type=AppPreferencesDataTypes.INT,
        default=1,
        category=AppPrefenrencesCategories.BENCHMARK,
    ),
    PreferencesStruct(
        name="workload_max_attempts",
        type=AppPreferencesDataTypes.INT,
        default=1000,
        category=AppPrefenrencesCategories.BENCHMARK,
    ),
    # VALIDATION CONFIGURATIONS
    PreferencesStruct(
        name="validate_n_max_limit",
        type=AppPreferencesDataTypes.INT,
        default=4096,
        category=AppPrefenrencesCategories.VALIDATION,
    ),
    # KEYGEN CONFIGURATIONS
    PreferencesStruct(
        name="keygen_prime_limit",
        type=AppPreferencesDataTypes.INT,
        default=2**32,
        category=AppPrefenrencesCategories.KEYGEN,
    ),
)


class AppPreferences:
    """Reads preferences from MODINV_* environment variables,
    falling back to the defaults declared in APP_PREFERENCES
    """

    def __getattribute__(self, name):
        config_prop = next(
            (prop for prop in APP_PREFERENCES if prop.name == name), None
        )
        if config_prop:
            return env_vars(
                config_prop.env_name,
                default=config_prop.default,
                cast=config_prop.type.to_type(),
            )
        return super(AppPreferences, self).__getattribute__(name)
