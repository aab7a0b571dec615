"""
Angle parsing for configuration files: plain radians or multiples of pi such as "5pi/6", "-pi/2" or "pi".
"""
import math
import re

from scattering.errors import ConfigError

_PI_FORM = re.compile(r"^([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?$", re.IGNORECASE)


def parse_angle(value, name: str = "angle") -> float:
    if isinstance(value, bool):
        raise ConfigError(f"{name} must be a number or a pi-fraction, got {value!r}.")
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise ConfigError(f"{name} must be a number or a pi-fraction, got {type(value).__name__}.")

    text = value.strip()
    match = _PI_FORM.match(text)
    if match:
        sign, numerator, denominator = match.groups()
        angle = (float(numerator) if numerator else 1.0) * math.pi
        if denominator:
            if float(denominator) == 0:
                raise ConfigError(f"{name}: zero denominator in {value!r}.")
            angle /= float(denominator)
        return -angle if sign == "-" else angle
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{name}: cannot read {value!r} as an angle.") from None
