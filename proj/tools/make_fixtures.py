#!/usr/bin/env python3
# Copyright 2026 The gridxai Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the deterministic test fixtures under tests/fixtures.

  entsoe/          one market document per study series for October 2021,
                   plus redispatch.csv for the same month
  redispatch_dst_fall.csv, redispatch_dst_spring.csv
                   hourly rows across the 2021 clock changes
  mixed_50.jsonl   50 intervention records of all kinds
  interventions_1000.jsonl
                   1000 random records for conservation checks
"""

import datetime as dt
import json
import math
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
START = dt.datetime(2021, 10, 1, tzinfo=dt.timezone.utc)
END = dt.datetime(2021, 11, 1, tzinfo=dt.timezone.utc)
HOURS = int((END - START).total_seconds() // 3600)

AREAS = ["50hertz", "amprion", "tennet", "transnet"]
OFFSHORE = ["50hertz", "tennet"]
EXCHANGE_ZONES = ["AT", "BE", "CH", "CZ", "DK1", "DK2", "FR", "NL", "PL"]
PRICE_ZONES = ["DE_LU", "AT", "BE", "CZ", "DK1", "FR", "NL"]

GERMAN_TSOS = ["50Hertz", "Amprion", "TenneT DE", "TransnetBW"]
FOREIGN_TSOS = ["APG", "TenneT NL", "Swissgrid", "PSE"]


def iso(t):
    return t.strftime("%Y-%m-%dT%H:%MZ")


def document(points_by_period, unit, curve="A01", root="GL_MarketDocument"):
    """points_by_period: list of (start, end, resolution_minutes, [(pos, value)])."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<{root} xmlns="urn:iec62325.351:tc57wg16:451-6:generationloaddocument:3:0">',
             "  <mRID>fixture</mRID>",
             "  <TimeSeries>",
             "    <mRID>1</mRID>",
             f"    <curveType>{curve}</curveType>"]
    if unit == "MW":
        lines.append("    <quantity_Measure_Unit.name>MAW</quantity_Measure_Unit.name>")
    else:
        lines.append("    <currency_Unit.name>EUR</currency_Unit.name>")
        lines.append("    <price_Measure_Unit.name>MWH</price_Measure_Unit.name>")
    tag = "quantity" if unit == "MW" else "price.amount"
    for start, end, res, points in points_by_period:
        lines.append("    <Period>")
        lines.append(f"      <timeInterval><start>{iso(start)}</start><end>{iso(end)}</end></timeInterval>")
        lines.append(f"      <resolution>PT{res}M</resolution>")
        for pos, value in points:
            lines.append(f"      <Point><position>{pos}</position><{tag}>{value:g}</{tag}></Point>")
        lines.append("    </Period>")
    lines.append("  </TimeSeries>")
    lines.append(f"</{root}>")
    return "\n".join(lines) + "\n"


def hourly(values, drop=()):
    return [(START, END, 60, [(i + 1, round(v, 1)) for i, v in enumerate(values) if i not in drop])]


def profile(rng, base, daily, noise, phase=0.0):
    out = []
    state = 0.0
    for h in range(HOURS):
        state = 0.9 * state + rng.gauss(0, noise)
        out.append(base + daily * math.sin(2 * math.pi * ((h % 24) - 6 + phase) / 24) + state)
    return out


def write_entsoe():
    rng = random.Random(20211001)
    d = ROOT / "entsoe"
    d.mkdir(parents=True, exist_ok=True)
    files = {}
    loads = {"50hertz": 9000, "amprion": 16000, "tennet": 14000, "transnet": 7000}
    wind_cap = {"50hertz": 7000, "amprion": 3000, "tennet": 9000, "transnet": 600}
    for a in AREAS:
        load = [max(1000.0, v) for v in profile(rng, loads[a], 0.15 * loads[a], 150)]
        wind = [max(0.0, wind_cap[a] * (0.35 + 0.25 * math.sin(h / 40.0 + len(a))) + rng.gauss(0, 80))
                for h in range(HOURS)]
        solar = [max(0.0, (3000 if a != "50hertz" else 2500) *
                     math.sin(math.pi * ((h % 24) - 6) / 12)) if 6 <= h % 24 <= 18 else 0.0
                 for h in range(HOURS)]
        ror = [max(0.0, v) for v in profile(rng, {"50hertz": 20, "amprion": 180,
                                                  "tennet": 900, "transnet": 450}[a], 10, 8)]
        offshore = ([max(0.0, (4000 if a == "tennet" else 1000) *
                         (0.45 + 0.3 * math.sin(h / 30.0)) + rng.gauss(0, 60)) for h in range(HOURS)]
                    if a in OFFSHORE else [0.0] * HOURS)
        total = [l * 0.8 + w + s + r + o + rng.gauss(0, 50)
                 for l, w, s, r, o in zip(load, wind, solar, ror, offshore)]
        if a == "50hertz":
            # Quarter-hourly load: four points per hour averaging to the hourly value.
            pts = []
            for h, v in enumerate(load):
                v = round(v)
                for k, q in enumerate((v - 3, v - 1, v + 1, v + 3)):
                    pts.append((4 * h + k + 1, q))
            files[f"load_forecast__{a}.xml"] = document([(START, END, 15, pts)], "MW")
        else:
            files[f"load_forecast__{a}.xml"] = document(hourly(load), "MW")
        files[f"wind_onshore_fc__{a}.xml"] = document(hourly(wind), "MW")
        # Two missing hours are interpolated during assembly.
        files[f"solar_fc__{a}.xml"] = document(
            hourly(solar, drop=(100, 101) if a == "amprion" else ()), "MW")
        files[f"ror_hydro_fc__{a}.xml"] = document(hourly(ror), "MW")
        files[f"other_generation_fc__{a}.xml"] = document(hourly(total), "MW")
        if a in OFFSHORE:
            files[f"wind_offshore_fc__{a}.xml"] = document(hourly(offshore), "MW")
    for z in EXCHANGE_ZONES:
        exp = [max(0.0, v) for v in profile(rng, 900, 300, 120)]
        imp = [max(0.0, v) for v in profile(rng, 700, 250, 120, phase=6)]
        # Five missing hours exceed the interpolation limit; those rows are dropped.
        drop = tuple(range(300, 305)) if z == "PL" else ()
        files[f"scheduled_exchange__DE_LU__{z}.xml"] = document(hourly(exp), "MW")
        files[f"scheduled_exchange__{z}__DE_LU.xml"] = document(hourly(imp, drop=drop), "MW")
    for z in PRICE_ZONES:
        prices = profile(rng, 140 if z != "DK1" else 120, 40, 6)
        periods = []
        for day in range(HOURS // 24):
            s = START + dt.timedelta(days=day)
            pts = []
            prev = None
            for h in range(24):
                v = round(prices[24 * day + h], 2)
                if z == "DE_LU" and prev is not None and v == prev:
                    continue
                if z == "DE_LU" and h % 6 == 5:
                    v = prev  # repeated value, omitted under curve A03
                    continue
                pts.append((h + 1, v))
                prev = v
            periods.append((s, s + dt.timedelta(days=1), 60, pts))
        curve = "A03" if z == "DE_LU" else "A01"
        files[f"day_ahead_price__{z}.xml"] = document(periods, "EUR/MWh", curve,
                                                      root="Publication_MarketDocument")
    for name, text in files.items():
        (d / name).write_text(text)
    write_month_redispatch(d / "redispatch.csv")


def german(v):
    whole, frac = f"{v:.1f}".split(".")
    neg = whole.startswith("-")
    whole = whole.lstrip("-")
    groups = []
    while len(whole) > 3:
        groups.insert(0, whole[-3:])
        whole = whole[:-3]
    groups.insert(0, whole)
    return ("-" if neg else "") + ".".join(groups) + "," + frac


HEADER = ("BEGINN;ENDE;ANFORDERNDER_UENB;ANWEISENDER_UENB;GRUND_DER_MASSNAHME;RICHTUNG;"
          "ART_DER_MASSNAHME;BETROFFENE_ANLAGE;MITTLERE_LEISTUNG_MW;GESAMTE_ARBEIT_MWH;"
          "GRENZUEBERSCHREITEND")


def berlin(t):
    """UTC datetime to German local wall time."""
    y = t.year
    def last_sunday(month):
        d = dt.datetime(y, month, 31 if month in (3, 10) else 30, 1, tzinfo=dt.timezone.utc)
        while d.weekday() != 6:
            d -= dt.timedelta(days=1)
        return d
    summer = last_sunday(3) <= t < last_sunday(10)
    return t + dt.timedelta(hours=2 if summer else 1)


def local(t):
    return berlin(t).strftime("%d.%m.%Y %H:%M")


def write_month_redispatch(path):
    rng = random.Random(7)
    rows = [HEADER]
    # Starts are spread over the month; the late-October clock change is
    # avoided so every local stamp is unambiguous.
    for i in range(400):
        while True:
            start = START + dt.timedelta(minutes=15 * rng.randrange(0, HOURS * 4 - 40))
            if not (dt.datetime(2021, 10, 30, 22, tzinfo=dt.timezone.utc) <= start
                    <= dt.datetime(2021, 10, 31, 3, tzinfo=dt.timezone.utc)):
                break
        end = start + dt.timedelta(minutes=15 * rng.randint(1, 24))
        kind = rng.choices(["Strombedingter Redispatch", "Countertrading", "Netzreserve"],
                           [14, 4, 2])[0]
        reason = rng.choices(["Strombedingter Redispatch", "Spannungsbedingter Redispatch",
                              "Probestart"], [16, 3, 1])[0]
        if kind == "Countertrading":
            reason = "Strombedingter Countertrading"
        tso = rng.choice(GERMAN_TSOS) if rng.random() > 0.08 else rng.choice(FOREIGN_TSOS)
        direction = rng.choice(["Wirkleistungseinspeisung erhöhen",
                                "Wirkleistungseinspeisung reduzieren"])
        power = rng.randint(100, 15000) / 10
        cross = "Ja" if kind == "Countertrading" and rng.random() < 0.5 else "Nein"
        plant = "" if kind == "Countertrading" else f"Anlage {rng.randint(1, 60)}"
        energy = power * (end - start).total_seconds() / 3600
        use_energy = rng.random() < 0.2
        rows.append(";".join([local(start), local(end), tso, tso, reason, direction, kind, plant,
                              "" if use_energy else german(power),
                              german(energy) if use_energy else "", cross]))
    # Two malformed rows land in the rejects report.
    rows.append("01.10.2021 25:00;01.10.2021 26:00;Amprion;Amprion;Strombedingter Redispatch;"
                "Wirkleistungseinspeisung erhöhen;Strombedingter Redispatch;Anlage 1;10,0;;Nein")
    rows.append("02.10.2021 10:00;02.10.2021 11:00;Amprion;Amprion;Strombedingter Redispatch;"
                "Wirkleistungseinspeisung erhöhen;Strombedingter Redispatch;Anlage 1;zehn;;Nein")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_dst(path, day, hours_utc):
    rows = [HEADER]
    for k in range(hours_utc):
        s = day + dt.timedelta(hours=k)
        e = s + dt.timedelta(hours=1)
        rows.append(";".join([local(s), local(e), "TenneT DE", "TenneT DE",
                              "Strombedingter Redispatch", "Wirkleistungseinspeisung reduzieren",
                              "Strombedingter Redispatch", "Anlage 7", german(100 + k), "",
                              "Nein"]))
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def record(rng, start, end, **kw):
    r = {"start": start.strftime("%Y-%m-%dT%H:%M:%SZ"),
         "end": end.strftime("%Y-%m-%dT%H:%M:%SZ"),
         "direction": rng.choice(["increase", "decrease"]),
         "power_mw": rng.randint(10, 5000) / 10,
         "kind": "redispatch", "reason": "current",
         "requesting_tsos": [rng.choice(GERMAN_TSOS)],
         "cross_border": False}
    r.update(kw)
    return r


def write_mixed(path):
    rng = random.Random(50)
    base = dt.datetime(2021, 6, 1, tzinfo=dt.timezone.utc)
    out = []
    for i in range(50):
        s = base + dt.timedelta(minutes=15 * rng.randrange(0, 400))
        e = s + dt.timedelta(minutes=15 * rng.randint(1, 16))
        kind = ["redispatch", "countertrade", "grid_reserve"][i % 3]
        cross = kind == "countertrade" and i % 2 == 1
        reason = ["current", "current", "voltage", "current", "other"][i % 5]
        tsos = [rng.choice(FOREIGN_TSOS)] if i % 7 == 0 else [rng.choice(GERMAN_TSOS)]
        out.append(record(rng, s, e, kind=kind, cross_border=cross, reason=reason,
                          requesting_tsos=tsos))
    path.write_text("".join(json.dumps(r, separators=(",", ":")) + "\n" for r in out))


def write_thousand(path):
    rng = random.Random(1000)
    base = dt.datetime(2021, 3, 1, tzinfo=dt.timezone.utc)
    out = []
    for i in range(1000):
        s = base + dt.timedelta(minutes=rng.randrange(0, 60 * 24 * 30 - 600))
        e = s + dt.timedelta(minutes=rng.randint(5, 600))
        kind = rng.choices(["redispatch", "countertrade", "grid_reserve"], [12, 5, 3])[0]
        cross = kind == "countertrade" and rng.random() < 0.5
        reason = rng.choices(["current", "voltage", "other"], [16, 3, 1])[0]
        tsos = [rng.choice(FOREIGN_TSOS)] if rng.random() < 0.1 else [rng.choice(GERMAN_TSOS)]
        kw = dict(kind=kind, cross_border=cross, reason=reason, requesting_tsos=tsos)
        r = record(rng, s, e, **kw)
        if rng.random() < 0.2:
            # Some records state total energy instead of mean power.
            hours = (e - s).total_seconds() / 3600
            r["energy_mwh"] = round(r.pop("power_mw") * hours, 3)
        out.append(r)
    path.write_text("".join(json.dumps(r, separators=(",", ":")) + "\n" for r in out))


def main():
    write_entsoe()
    write_dst(ROOT / "redispatch_dst_fall.csv",
              dt.datetime(2021, 10, 30, 22, tzinfo=dt.timezone.utc), 25)
    write_dst(ROOT / "redispatch_dst_spring.csv",
              dt.datetime(2021, 3, 27, 23, tzinfo=dt.timezone.utc), 23)
    write_mixed(ROOT / "mixed_50.jsonl")
    write_thousand(ROOT / "interventions_1000.jsonl")


if __name__ == "__main__":
    main()
