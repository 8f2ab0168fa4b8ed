#!/usr/bin/env python3
"""Deterministic generator for the pinned June-2022-era fixture.

Writes NVD feeds (schema 1.1 per year plus a 2.0 feed for 2022), a CWE
catalog, a CAPEC catalog, an ATT&CK STIX 2.1 bundle, the curated CWE to
technique map, the glossary, the ground-truth file and the log4j CVE list.

The catalogs reuse real identifiers and names, but the CVE descriptions and
most cross references are synthetic.  The generator checks the
catalog statistics it is designed to reproduce before it writes anything.

Usage: gen_fixture.py OUTDIR
"""

import collections
import gzip
import hashlib
import io
import json
import os
import random
import sys
import uuid
from xml.sax.saxutils import escape, quoteattr

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from attack_table import parse_groups, parse_techniques  # noqa: E402
from cwe_table import CATEGORY_ROWS, parse_rows  # noqa: E402
from profiles import (ACTORS, COMPONENTS, CONFUSERS, GENERIC_IMPACTS,  # noqa: E402
                      PRODUCTS, PROFILES, VECTORS, VENDORS)

SEED = 20220615
NS = uuid.UUID("6c0f8d55-3b1e-4a53-9a7e-0d6f4f1e2b10")

# Test-split supports of the 22 most common weaknesses; totals are 5x.
TOP22 = {20: 2716, 22: 865, 59: 203, 78: 600, 79: 3449, 89: 1627, 94: 2200,
          98: 361, 119: 2153, 121: 173, 122: 279, 125: 322, 190: 207, 200: 2348,
          287: 2171, 352: 541, 416: 303, 434: 250, 451: 197, 476: 203, 618: 236,
          787: 166}
TIER2 = {400: 640, 269: 600, 862: 560, 863: 520, 77: 480, 611: 450, 918: 420,
         502: 400, 798: 380, 306: 350, 295: 330}
TIER3 = {601: 260, 522: 240, 732: 230, 668: 210, 835: 200, 770: 190, 74: 180, 362: 170}
TIER4 = {276: 130, 319: 125, 327: 120, 326: 110, 209: 105, 532: 100, 401: 95,
         617: 90, 674: 88, 843: 85}
N_TAIL = 215
NOISE = 0.15
MULTI_LABEL_RATE = 0.08
N_NOINFO = 8000
N_CATEGORY = 3000

# Technique sets that the log4j analysis depends on.
S20_CAPEC = ["T1055", "T1554", "T1562.003", "T1565", "T1574.006", "T1574.007", "T1559.001"]
S20 = S20_CAPEC + ["T1203", "T1211"]
S400 = ["T1499"]
S502_CAPEC = ["T1059"]
S502 = ["T1059", "T1134", "T1134.001", "T1134.002", "T1550.004"]
S89_CAPEC = ["T1190"]
S89 = ["T1190", "T1213", "T1602", "T1530"]
S276_CAPEC = ["T1574.005", "T1574.010", "T1574.011", "T1574.009", "T1574.001", "T1574.002",
              "T1574.008", "T1574.004", "T1574.012", "T1222", "T1222.001", "T1222.002",
              "T1543.003", "T1548.001", "T1548.003", "T1053.005", "T1547.001", "T1546.008",
              "T1546.001", "T1037"]
S276 = S276_CAPEC + ["T1078", "T1078.001", "T1078.003", "T1098", "T1136", "T1552.001",
                     "T1083", "T1548.002", "T1543"]
PROTECTED_CWES = {20, 74, 400, 502, 674, 276, 89}

LOG4J = [
    ("CVE-2021-44228", [20, 400, 502], "2021-12-10",
     "Apache Log4j2 2.0-beta9 through 2.15.0 (excluding security releases 2.12.2, 2.12.3, and 2.3.1) "
     "JNDI features used in configuration, log messages, and parameters do not protect against attacker "
     "controlled LDAP and other JNDI related endpoints. An attacker who can control log messages or log "
     "message parameters can execute arbitrary code loaded from LDAP servers when message lookup "
     "substitution is enabled."),
    ("CVE-2021-44832", [20, 74], "2021-12-28",
     "Apache Log4j2 versions 2.0-beta7 through 2.17.0 (excluding security fix releases 2.3.2 and 2.12.4) "
     "are vulnerable to a remote code execution (RCE) attack when a configuration uses a JDBC Appender "
     "with a JNDI LDAP data source URI when an attacker has control of the target LDAP server."),
    ("CVE-2021-45046", [502], "2021-12-14",
     "It was found that the fix to address CVE-2021-44228 in Apache Log4j 2.15.0 was incomplete in "
     "certain non-default configurations. This could allow attackers with control over Thread Context "
     "Map input data to craft malicious input data using a JNDI Lookup pattern resulting in an "
     "information leak and remote code execution in some environments."),
    ("CVE-2021-4104", [502], "2021-12-14",
     "JMSAppender in Log4j 1.2 is vulnerable to deserialization of untrusted data when the attacker has "
     "write access to the Log4j configuration. The attacker can provide TopicBindingName and "
     "TopicConnectionFactoryBindingName configurations causing JMSAppender to perform JNDI requests."),
    ("CVE-2021-44530", [20, 74], "2022-01-14",
     "An injection vulnerability exists in UniFi Network Application 6.5.53 and earlier versions "
     "(Log4J CVE-2021-44228) which allows a malicious actor to control the application."),
    ("CVE-2021-45105", [20, 674], "2021-12-18",
     "Apache Log4j2 versions 2.0-alpha1 through 2.16.0 did not protect from uncontrolled recursion from "
     "self-referential lookups. This allows an attacker with control over Thread Context Map data to "
     "cause a denial of service when a crafted string is interpreted."),
    ("CVE-2022-21704", [276], "2022-01-19",
     "log4js-node is a port of log4js to node.js. In affected versions default file permissions for log "
     "files created by the file, fileSync and dateFile appenders are world-readable."),
    ("CVE-2022-23302", [502], "2022-01-18",
     "JMSSink in all versions of Log4j 1.x is vulnerable to deserialization of untrusted data when the "
     "attacker has write access to the Log4j configuration or if the configuration references an LDAP "
     "service the attacker has access to."),
    ("CVE-2022-23305", [89], "2022-01-18",
     "By design, the JDBCAppender in Log4j 1.2.x accepts an SQL statement as a configuration parameter "
     "where the values to be inserted are converters from PatternLayout. The message converter, %m, is "
     "likely to always be included. This allows attackers to manipulate the SQL by entering crafted "
     "strings into input fields or headers of an application that are logged allowing unintended SQL "
     "queries to be executed."),
    ("CVE-2022-23307", [502], "2022-01-18",
     "CVE-2020-9493 identified a deserialization issue that was present in Apache Chainsaw. Prior to "
     "Chainsaw V2.0 Chainsaw was a component of Apache Log4j 1.2.x where the same issue exists."),
]

# (technique, CVE, CWE, actor name or None for software, sentence)
PROCEDURES = [
    ("T1203", "CVE-2017-0199", 20, "APT28", "has exploited Microsoft Office vulnerability {cve} for execution."),
    ("T1203", "CVE-2017-11882", 119, "APT37", "has used {cve} in the Equation Editor to execute code."),
    ("T1203", "CVE-2012-0158", 94, "Lazarus Group", "has exploited {cve} in malicious documents."),
    ("T1203", "CVE-2014-6352", 94, "APT41", "leveraged {cve} for execution through a crafted OLE object."),
    ("T1203", "CVE-2017-8759", 20, "MuddyWater", "has exploited {cve} in the .NET framework."),
    ("T1203", "CVE-2018-0802", 119, "HAFNIUM", "used {cve} to execute code from a crafted document."),
    ("T1203", "CVE-2018-4878", 416, "APT37", "has used a Flash exploit for {cve}."),
    ("T1203", "CVE-2016-4117", 787, None, "exploits {cve} to run its payload."),
    ("T1203", "CVE-2015-5119", 416, None, "has used {cve} in watering hole attacks."),
    ("T1203", "CVE-2014-1761", 787, None, "exploited {cve} in RTF documents."),
    ("T1203", "CVE-2013-3906", 787, None, "exploited {cve} via a crafted TIFF image."),
    ("T1203", "CVE-2015-2545", 20, None, "used {cve} in an EPS file embedded in a document."),
    ("T1203", "CVE-2017-0262", 787, "APT28", "has exploited {cve} in EPS filters."),
    ("T1203", "CVE-2018-8174", 416, None, "exploited the VBScript engine flaw {cve}."),
    ("T1203", "CVE-2020-0674", 787, None, "has exploited {cve} in Internet Explorer."),
    ("T1203", "CVE-2021-40444", 22, None, "exploited {cve} using a crafted ActiveX document."),
    ("T1203", "CVE-2016-0189", 787, None, "exploited {cve} through a malicious web page."),
    ("T1203", "CVE-2019-0541", 20, None, "used {cve} for client execution."),
    ("T1211", "CVE-2015-4902", 20, "APT28", "has used {cve} to bypass security features."),
    ("T1211", "CVE-2017-0263", 416, None, "exploited {cve} to escape the renderer sandbox."),
    ("T1068", "CVE-2014-4113", 476, None, "has exploited {cve} to gain SYSTEM privileges."),
    ("T1068", "CVE-2015-1701", 416, None, "exploited {cve} in win32k for privilege escalation."),
    ("T1068", "CVE-2016-7255", 787, None, "has used {cve} to escalate privileges."),
    ("T1068", "CVE-2018-8120", 476, None, "exploited {cve} to elevate privileges."),
    ("T1068", "CVE-2019-0808", 476, None, "has used {cve} to gain kernel privileges."),
    ("T1068", "CVE-2021-1732", 787, None, "has exploited {cve} for local privilege escalation."),
    ("T1068", "CVE-2020-0787", 59, None, "exploited {cve} in BITS for privilege escalation."),
    ("T1068", "CVE-2019-1458", 416, None, "has used {cve} to elevate privileges."),
    ("T1068", "CVE-2015-0057", 416, None, "exploited {cve} in the win32k driver."),
    ("T1068", "CVE-2016-0167", 787, None, "has exploited {cve} to gain privileges."),
    ("T1068", "CVE-2021-36934", 200, None, "exploited {cve} to read the SAM database."),
    ("T1068", "CVE-2017-0005", 787, None, "has used {cve} for privilege escalation."),
    ("T1210", "CVE-2017-0144", 119, None, "has used {cve} to spread across networks."),
    ("T1210", "CVE-2019-0708", 416, None, "has exploited {cve} in Remote Desktop Services."),
    ("T1210", "CVE-2020-1472", 287, None, "has exploited {cve} against domain controllers."),
    ("T1210", "CVE-2014-6271", 78, None, "has exploited {cve} in bash for lateral movement."),
    ("T1210", "CVE-2017-0146", 119, None, "has used {cve} to move laterally."),
    ("T1210", "CVE-2018-0171", 787, None, "exploited {cve} in network devices."),
    ("T1190", "CVE-2019-19781", 22, None, "has exploited {cve} for initial access."),
    ("T1190", "CVE-2018-13379", 22, None, "has exploited {cve} in VPN appliances."),
    ("T1190", "CVE-2019-11510", 22, None, "has exploited {cve} to obtain credentials."),
    ("T1190", "CVE-2021-26855", 287, "HAFNIUM", "has exploited {cve} to compromise Exchange servers."),
    ("T1190", "CVE-2019-0604", 94, None, "has exploited {cve} in SharePoint."),
    ("T1190", "CVE-2020-0688", 287, None, "has exploited {cve} in Exchange."),
    ("T1190", "CVE-2021-22205", 434, None, "has exploited {cve} in GitLab."),
    ("T1190", "CVE-2014-3704", 89, None, "has exploited {cve} in Drupal."),
]

SOFTWARE = [("S0001", "malware", "Trojan.Karagany"), ("S0002", "tool", "Mimikatz"),
            ("S0012", "malware", "PoisonIvy"), ("S0013", "malware", "PlugX"),
            ("S0023", "malware", "CHOPSTICK"), ("S0039", "tool", "Net"),
            ("S0125", "malware", "Remsec"), ("S0154", "tool", "Cobalt Strike"),
            ("S0266", "malware", "TrickBot"), ("S0367", "malware", "Emotet"),
            ("S0368", "malware", "NotPetya"), ("S0366", "malware", "WannaCry"),
            ("S0650", "malware", "QakBot"), ("S0606", "malware", "Bad Rabbit")]

TACTIC_GOALS = {
    "execution": "run adversary-controlled code on a local or remote system",
    "persistence": "maintain their foothold on systems across restarts and changed credentials",
    "privilege-escalation": "gain higher-level permissions on a system or network",
    "defense-evasion": "avoid detection by defenders and security software",
    "credential-access": "steal account names and passwords",
    "discovery": "gain knowledge about the system and internal network",
    "lateral-movement": "enter and control remote systems on a network",
    "collection": "gather information relevant to their objectives",
    "command-and-control": "communicate with compromised systems to control them",
    "exfiltration": "steal data from the victim network",
    "impact": "disrupt availability or compromise integrity of systems and data",
    "initial-access": "get into the victim network",
    "reconnaissance": "gather information they can use to plan future operations",
    "resource-development": "establish resources they can use to support operations",
}

TECHNIQUE_TEXT = {
    "T1203": "Adversaries may exploit software vulnerabilities in client applications to execute code. "
             "Vulnerabilities can exist in software due to unsecure coding practices that can lead to "
             "unanticipated behavior. Adversaries can take advantage of certain vulnerabilities through "
             "targeted exploitation for the purpose of arbitrary code execution, often delivered through "
             "browsers, office documents or crafted files opened by a user.",
    "T1068": "Adversaries may exploit software vulnerabilities in an attempt to elevate privileges. "
             "Exploitation of a software vulnerability occurs when an adversary takes advantage of a "
             "programming error in a program, service, or within the operating system software or kernel "
             "itself to execute adversary-controlled code with higher permissions.",
    "T1210": "Adversaries may exploit remote services to gain unauthorized access to internal systems once "
             "inside of a network. Exploitation of a software vulnerability occurs when an adversary takes "
             "advantage of a programming error in a network service to enable lateral movement.",
    "T1190": "Adversaries may attempt to take advantage of a weakness in an Internet-facing computer or "
             "program using software, data, or commands in order to cause unintended or unanticipated "
             "behavior. The weakness in the system can be a bug, a glitch, or a design vulnerability, such "
             "as SQL injection in a public web application or server.",
    "T1211": "Adversaries may exploit a system or application vulnerability to bypass security features. "
             "Exploitation of a vulnerability occurs when an adversary takes advantage of a programming "
             "error to evade defenses such as sandboxes or security software.",
    "T1499": "Adversaries may perform Endpoint Denial of Service attacks to degrade or block the "
             "availability of services to users, for example by exhausting system resources or crashing "
             "the application.",
    "T1059": "Adversaries may abuse command and script interpreters to execute commands, scripts, or "
             "binaries. These interfaces provide ways of interacting with computer systems.",
    "T1055": "Adversaries may inject code into processes in order to evade process-based defenses as well "
             "as possibly elevate privileges.",
}


def uid(*parts):
    return str(uuid.uuid5(NS, "/".join(str(p) for p in parts)))


class Gen:
    def __init__(self):
        self.rng = random.Random(SEED)
        self.cwes = parse_rows()
        self.cwe_by_id = {c["id"]: c for c in self.cwes}
        for obsolete in (217, 218):
            self.cwe_by_id[obsolete]["status"] = "Obsolete"
        self.techniques = parse_techniques()
        self.tech_by_id = {t["id"]: t for t in self.techniques}
        self.groups = parse_groups()
        self.revoked_groups = {g["id"] for g in self.groups if g["name"].endswith("(legacy)")}
        self.active_groups = [g for g in self.groups if g["id"] not in self.revoked_groups]
        self.group_by_name = {g["name"]: g for g in self.groups}
        self.check_catalog()

    # ------------------------------------------------------------------ catalog
    def check_catalog(self):
        ids = set(self.cwe_by_id)
        assert len(ids) == len(self.cwes), "duplicate CWE ids"
        for c in self.cwes:
            for p in c["parents"]:
                assert p in ids, (c["id"], p)
                assert self.cwe_by_id[p]["status"] not in ("Deprecated", "Obsolete")
        roots = [c["id"] for c in self.cwes
                 if not c["parents"] and c["status"] not in ("Deprecated", "Obsolete")]
        assert sorted(roots) == [284, 435, 664, 682, 691, 693, 697, 703, 707, 710], roots
        for t in self.techniques:
            if "." in t["id"]:
                assert t["id"].split(".")[0] in self.tech_by_id, t["id"]
        for tid in S20 + S400 + S502 + S89 + S276:
            assert tid in self.tech_by_id, tid
        names = [g["name"] for g in self.groups]
        assert len(set(names)) == len(names)
        assert len({g["id"] for g in self.groups}) == len(self.groups)

    def active_cwe_ids(self):
        return sorted(c["id"] for c in self.cwes if c["status"] not in ("Deprecated", "Obsolete"))

    # ------------------------------------------------------------------ labels
    def label_totals(self):
        totals = {}
        totals.update({k: 5 * v for k, v in TOP22.items()})
        totals.update(TIER2)
        totals.update(TIER3)
        totals.update(TIER4)
        candidates = [c for c in self.active_cwe_ids() if c not in totals]
        tail = sorted(self.rng.sample(candidates, N_TAIL))
        for c in tail:
            totals[c] = self.rng.randint(1, 60)
        self.tail = tail
        assert len(totals) == 266
        return totals

    # ------------------------------------------------------------------ text
    def profile(self, cwe):
        if cwe in PROFILES:
            return PROFILES[cwe]
        entry = self.cwe_by_id[cwe]
        name = entry["name"]
        if "(" in name:
            name = name[:name.index("(")].strip()
        mech = [name.lower()] + [a.lower() for a in entry["alt_terms"]]
        return dict(mech=mech, impact=GENERIC_IMPACTS)

    def product(self):
        r = self.rng
        return "%s %s" % (r.choice(VENDORS), r.choice(PRODUCTS))

    def version(self):
        r = self.rng
        return "%d.%d.%d" % (r.randint(1, 12), r.randint(0, 9), r.randint(0, 30))

    def mech_for(self, cwe):
        r = self.rng
        src = cwe
        if r.random() < NOISE:
            pool = CONFUSERS.get(cwe) or sorted(TOP22)
            src = r.choice(pool)
        return r.choice(self.profile(src)["mech"])

    def impact_for(self, cwe):
        r = self.rng
        if r.random() < 0.75:
            return r.choice(self.profile(cwe)["impact"])
        return r.choice(GENERIC_IMPACTS)

    def describe(self, labels):
        r = self.rng
        main = labels[0]
        mech = self.mech_for(main)
        impact = self.impact_for(main)
        prod, ver = self.product(), self.version()
        comp, actor, vec = r.choice(COMPONENTS), r.choice(ACTORS), r.choice(VECTORS)
        form = r.randrange(4)
        if form == 0:
            text = "%s %s: %s in %s allows %s to %s via %s." % (prod, ver, mech, comp, actor, impact, vec)
        elif form == 1:
            text = ("A vulnerability in %s of %s %s could allow %s to %s. The issue is due to %s."
                    % (comp, prod, ver, actor, impact, mech))
        elif form == 2:
            text = "%s before %s has an issue where %s %s; %s can %s." % (prod, ver, comp, mech, actor, impact)
        else:
            text = ("%s%s was discovered in %s %s. Exploitation allows %s to %s via %s."
                    % (mech[0].upper(), mech[1:], prod, ver, actor, impact, vec))
        for extra in labels[1:]:
            text += " Additionally, %s can lead to an attacker being able to %s." % (
                self.mech_for(extra), self.impact_for(extra))
        roll = r.random()
        if roll < 0.12:
            text += " This issue affects versions prior to %s." % self.version()
        elif roll < 0.18:
            text += " NOTE: the vendor disputes the significance of this report."
        elif roll < 0.26:
            text += " The fix is in commit %s." % hashlib.sha1(text.encode()).hexdigest()[:12]
        return text

    # ------------------------------------------------------------------ CVEs
    def build_cves(self):
        r = self.rng
        totals = self.label_totals()
        self.totals = totals
        remaining = dict(totals)
        specials = []
        for cve, labels, date, desc in LOG4J:
            specials.append({"id": cve, "cwes": ["CWE-%d" % c for c in labels], "labels": labels,
                             "published": date, "description": desc})
        seen = set()
        for tech, cve, cwe, _actor, _sent in PROCEDURES:
            if cve in seen:
                continue
            seen.add(cve)
            specials.append({"id": cve, "cwes": ["CWE-%d" % cwe], "labels": [cwe],
                             "published": "%s-%02d-%02d" % (cve[4:8], r.randint(1, 12), r.randint(1, 28)),
                             "description": self.describe([cwe])})
        assert len(seen) == 46, len(seen)
        for s in specials:
            for c in s["labels"]:
                remaining[c] -= 1
                assert remaining[c] >= 0, c
        specials.append({"id": "CVE-2018-1977", "cwes": ["NVD-CWE-noinfo"], "labels": [],
                         "published": "2018-06-12",
                         "description": "IBM DB2 for Linux, UNIX and Windows 11.1 could allow a remote, "
                                        "authenticated DB2 user to gain privileges by exploiting a flaw in "
                                        "the stored procedure handler."})

        slots = []
        for c in sorted(remaining):
            slots.extend([c] * remaining[c])
        r.shuffle(slots)
        groups = []
        i = 0
        while i < len(slots):
            if i + 1 < len(slots) and slots[i] != slots[i + 1] and r.random() < MULTI_LABEL_RATE:
                groups.append([slots[i], slots[i + 1]])
                i += 2
            else:
                groups.append([slots[i]])
                i += 1

        years = list(range(1999, 2023))
        weights = [max(1, (y - 1996)) ** 2 for y in years]
        used_ids = {s["id"] for s in specials}
        counters = collections.defaultdict(lambda: 999)

        def new_id(year):
            while True:
                counters[year] += r.randint(1, 3)
                cid = "CVE-%d-%04d" % (year, counters[year])
                if cid not in used_ids:
                    used_ids.add(cid)
                    return cid

        def pub(year):
            month = r.randint(1, 6 if year == 2022 else 12)
            return "%d-%02d-%02d" % (year, month, r.randint(1, 28))

        records = list(specials)
        for labels in groups:
            year = r.choices(years, weights)[0]
            cid = new_id(year)
            records.append({"id": cid, "cwes": ["CWE-%d" % c for c in labels], "labels": labels,
                            "published": pub(year), "description": self.describe(labels)})
        labelled = sorted(totals)
        categories = [c for c, _ in CATEGORY_ROWS]
        for k in range(N_NOINFO + N_CATEGORY):
            year = r.choices(years, weights)[0]
            cid = new_id(year)
            hidden = r.choice(labelled)
            if k < N_NOINFO:
                tag = ["NVD-CWE-noinfo"] if r.random() < 0.6 else ["NVD-CWE-Other"]
            else:
                tag = ["CWE-%d" % r.choice(categories)]
            records.append({"id": cid, "cwes": tag, "labels": [], "published": pub(year),
                            "description": self.describe([hidden])})
        records.sort(key=lambda x: (int(x["id"][4:8]), int(x["id"][9:])))
        self.records = records
        counts = collections.Counter(c for rec in records for c in rec["labels"])
        assert dict(counts) == totals
        return records

    # ------------------------------------------------------------------ CAPEC
    def build_capec(self):
        r = random.Random(SEED + 1)
        all_active = self.active_cwe_ids()
        filler_cwes = [269, 862, 863, 77, 611, 918, 798, 306, 295,
                       601, 522, 732, 668, 835, 770, 362,
                       319, 327, 326, 209, 532, 401, 617, 843,
                       250, 384, 307, 1021, 444, 113, 117, 521, 613, 640, 15]
        assert len(set(filler_cwes)) == 35
        assert not set(filler_cwes) & PROTECTED_CWES and not set(filler_cwes) & set(TOP22)
        protected_fam = self.protected_families()
        used = set(S20 + S400 + S502 + S89 + S276 + ["T1068", "T1210"])
        pool = [t["id"] for t in self.techniques if t["id"] not in used and t["id"] not in protected_fam]
        filler_techs = sorted(r.sample(pool, 59))

        mapped = []  # (cwes, techniques)
        for t in S20_CAPEC:
            cw = [20, 74] if t == "T1055" else [20]
            mapped.append((cw, [t]))
        mapped.append(([400, 770], ["T1499"]))
        mapped.append(([502], ["T1059"]))
        mapped.append(([89], ["T1190"]))
        chunks = [S276_CAPEC[i:i + 2] for i in range(0, 16, 2)] + [[t] for t in S276_CAPEC[16:]]
        assert len(chunks) == 12 and sum(len(c) for c in chunks) == 20
        for k, ch in enumerate(chunks):
            mapped.append(([276, 732] if k % 3 == 0 else [276], ch))
        for i in range(57):
            techs = [filler_techs[i]]
            if i < 2:
                techs.append(filler_techs[57 + i])
            cws = [filler_cwes[i % 35]]
            if i % 4 == 1:
                cws.append(filler_cwes[(i * 7 + 3) % 35])
            mapped.append((sorted(set(cws)), techs))
        assert len(mapped) == 79

        mapped_cwes = {c for cw, _ in mapped for c in cw}
        assert len(mapped_cwes) == 41, len(mapped_cwes)
        others = [c for c in all_active if c not in mapped_cwes]
        related_only_cwes = sorted(set(TOP22) - mapped_cwes)
        extra = sorted(r.sample([c for c in others if c not in related_only_cwes],
                                79 - len(related_only_cwes)))
        related_only_cwes = sorted(related_only_cwes + extra)
        assert len(related_only_cwes) == 79
        related = []
        for i in range(260):
            cw = {related_only_cwes[i % 79]}
            if r.random() < 0.4:
                cw.add(r.choice(sorted(mapped_cwes | set(related_only_cwes))))
            related.append(sorted(cw))

        ids = sorted(r.sample(range(1, 720), 530))
        order = list(range(530))
        r.shuffle(order)
        patterns = []
        for k, idx in enumerate(order):
            pid = ids[idx]
            if k < 79:
                cw, te = mapped[k]
                patterns.append({"id": pid, "cwes": cw, "techs": te, "bad": []})
            elif k < 79 + 260:
                patterns.append({"id": pid, "cwes": related[k - 79], "techs": [], "bad": []})
            else:
                patterns.append({"id": pid, "cwes": [], "techs": [], "bad": []})
        bad_slots = [p for p in patterns if not p["techs"]][:4]
        bad_slots[0]["bad"] = ["TBD"]
        bad_slots[1]["bad"] = [""]
        bad_slots[2]["bad"] = ["10-59"]
        bad_slots[3]["bad"] = ["1059.abc"]
        patterns.sort(key=lambda p: p["id"])
        self.capec = patterns

        assert len(patterns) == 530
        assert sum(1 for p in patterns if p["cwes"]) == 339
        assert len({c for p in patterns for c in p["cwes"]}) == 120
        assert sum(1 for p in patterns if p["techs"]) == 79
        assert len({c for p in patterns if p["techs"] for c in p["cwes"]}) == 41
        assert len({t for p in patterns for t in p["techs"]}) == 89
        return patterns

    def protected_families(self):
        fam = set()
        for t in S20 + S400 + S502 + S89 + S276:
            fam.add(t)
            for u in self.tech_by_id:
                if u.startswith(t + "."):
                    fam.add(u)
        return fam

    # ------------------------------------------------------------------ ATT&CK usage
    def build_usage(self):
        r = random.Random(SEED + 2)
        g = self.group_by_name
        named = {
            "APT28": (["T1203", "T1211"], ["T1134.001"]),
            "APT29": (["T1203"], ["T1550.004"]),
            "Lazarus Group": (["T1203"], ["T1134.002"]),
            "APT37": (["T1055", "T1203"], []),
            "HAFNIUM": (["T1203"], []),
            "APT41": (["T1055", "T1203"], []),
            "MuddyWater": (["T1559.001", "T1203"], []),
            "Magic Hound": ([], ["T1059"]),
            "Fox Kitten": ([], ["T1059"]),
        }
        names = sorted(x["name"] for x in self.active_groups)
        free = [n for n in names if n not in named]
        r.shuffle(free)
        overlap = ["APT28", "APT29", "Lazarus Group"] + free[:3]
        a20_only = ["APT37", "HAFNIUM", "APT41", "MuddyWater"] + free[3:30]
        a502_only = ["Magic Hound", "Fox Kitten"] + free[30:40]
        a400_only = free[40:41]
        assert len(overlap) == 6 and len(a20_only) == 31 and len(a502_only) == 12

        uses = collections.defaultdict(set)
        for n in overlap + a20_only:
            if n in named:
                uses[n].update(named[n][0])
            else:
                uses[n].update(r.sample(S20, r.randint(1, 3)))
        for n in overlap + a502_only:
            if n in named:
                uses[n].update(named[n][1])
            else:
                uses[n].update(r.sample(S502, r.randint(1, 2)))
        for n in a400_only:
            uses[n].add("T1499")

        a276 = sorted(r.sample(names, 62))
        for n in a276:
            uses[n].update(r.sample(S276, r.randint(1, 4)))
        proc_t1190 = [a for (t, _c, _w, a, _s) in PROCEDURES if t == "T1190" and a]
        a89 = set(proc_t1190)
        rest = [n for n in names if n not in a89]
        a89.update(r.sample(rest, 14 - len(a89)))
        a89 = sorted(a89)
        for n in a89:
            uses[n].update(r.sample(S89, r.randint(1, 2)))
        for n in proc_t1190:
            uses[n].add("T1190")

        fam = self.protected_families()
        background = [t["id"] for t in self.techniques if t["id"] not in fam]
        for n in names:
            uses[n].update(r.sample(background, r.randint(6, 20)))

        # Procedure examples: a group or software object "uses" the technique and names the CVE.
        software_names = [s[2] for s in SOFTWARE]
        a20_pool = sorted(n for n in overlap + a20_only if n not in named)
        proc_rel = collections.defaultdict(list)  # (source name, technique) -> sentences
        sw_i = 0
        for tech, cve, _cwe, actor, sent in PROCEDURES:
            if actor is None:
                if tech in ("T1203", "T1211") and r.random() < 0.5:
                    actor = r.choice(a20_pool)
                    uses[actor].add(tech)
                elif tech == "T1190":
                    actor = r.choice(a89)
                    uses[actor].add(tech)
                elif tech in ("T1068", "T1210") and r.random() < 0.6:
                    actor = r.choice(names)
                    uses[actor].add(tech)
                else:
                    actor = software_names[sw_i % len(software_names)]
                    sw_i += 1
            else:
                assert tech in uses[actor], (actor, tech)
            proc_rel[(actor, tech)].append(sent.format(cve=cve))
        self.uses = uses
        self.proc_rel = proc_rel
        self.pools = dict(a20=set(overlap + a20_only), a502=set(overlap + a502_only),
                          a400=set(a400_only), a276=set(a276), a89=set(a89))

    # ------------------------------------------------------------------ curated map
    def curated_rows(self):
        rows = []
        for t in ["T1134", "T1134.001", "T1134.002", "T1550.004"]:
            rows.append((502, t, "deserialization gadget chains run with the service token"))
        for t in ["T1213", "T1602", "T1530"]:
            rows.append((89, t, "database content exposed through injected queries"))
        for t in S276[20:]:
            rows.append((276, t, "permissive defaults expose accounts and files"))
        rows += [(20, "T1203", "client applications parsing unvalidated input"),
                 (400, "T1499", "resource exhaustion of the endpoint"),
                 (79, "T1189", "script injected into a visited site"),
                 (434, "T1505.003", "uploaded server-side script"),
                 (22, "T1083", "traversal used to enumerate files"),
                 (287, "T1078", "authentication bypass yields a valid session"),
                 (798, "T1078.001", "vendor default account"),
                 (99999, "T1059", "unknown weakness id"),
                 (79, "T9999", "unknown technique id")]
        return rows

    # ------------------------------------------------------------------ verification
    def verify_chains(self):
        cve_cwes = {rec["id"]: rec["labels"] for rec in self.records}
        edges = collections.defaultdict(set)
        for p in self.capec:
            for c in p["cwes"]:
                for t in p["techs"]:
                    edges[c].add(t)
        for tech, cve, _cwe, _a, _s in PROCEDURES:
            for c in cve_cwes[cve]:
                edges[c].add(tech)
        for c, t, _n in self.curated_rows():
            if c in self.cwe_by_id and t in self.tech_by_id:
                edges[c].add(t)
        actors_of = collections.defaultdict(set)
        for n, ts in self.uses.items():
            for t in ts:
                actors_of[t].add(n)
                if "." in t:
                    actors_of[t.split(".")[0]].add(n)
        expected = {"CVE-2021-44228": (15, 50), "CVE-2021-44832": (9, 37), "CVE-2021-45046": (5, 18),
                    "CVE-2021-4104": (5, 18), "CVE-2021-44530": (9, 37), "CVE-2021-45105": (9, 37),
                    "CVE-2022-21704": (29, 62), "CVE-2022-23302": (5, 18), "CVE-2022-23305": (4, 14),
                    "CVE-2022-23307": (5, 18)}
        for cve, (nt, na) in expected.items():
            techs = set().union(*(edges[c] for c in cve_cwes[cve]))
            acts = set().union(*(actors_of[t] for t in techs)) if techs else set()
            assert (len(techs), len(acts)) == (nt, na), (cve, len(techs), len(acts))
        assert edges[400] == {"T1499"}
        assert edges[502] == set(S502)
        assert edges[20] == set(S20)
        t1203 = actors_of["T1203"]
        for n in ("HAFNIUM", "APT28", "APT37", "Lazarus Group"):
            assert n in t1203, n

    # ------------------------------------------------------------------ writers
    def write_all(self, out):
        os.makedirs(os.path.join(out, "nvd"), exist_ok=True)
        self.write_nvd(out)
        self.write_cwe(out)
        self.write_capec(out)
        self.write_attack(out)
        with open(os.path.join(out, "cwe_attack_curated.tsv"), "w") as f:
            f.write("# cwe_id\ttechnique_id\tnote\n")
            for c, t, n in self.curated_rows():
                f.write("%d\t%s\t%s\n" % (c, t, n))
        with open(os.path.join(out, "cwe_glossary.txt"), "w") as f:
            f.write("# one synonym group per line, phrases separated by '|'\n")
            for line in ["remote code execution | arbitrary code execution | execute arbitrary code",
                         "denial of service | DoS",
                         "privilege escalation | elevation of privilege | gain privileges | escalate privileges",
                         "man-in-the-middle | adversary-in-the-middle | MitM",
                         "sensitive information | sensitive data",
                         "specially crafted | maliciously crafted"]:
                f.write(line + "\n")
        with open(os.path.join(out, "log4j_cves.txt"), "w") as f:
            for cve, *_ in LOG4J:
                f.write(cve + "\n")
        self.write_ground_truth(out)

    def write_ground_truth(self, out):
        r = random.Random(SEED + 3)
        truth = collections.defaultdict(set)
        for tech, cve, *_ in PROCEDURES:
            truth[cve].add(tech)
        manual_labels = {79: ["T1189"], 434: ["T1505.003"], 22: ["T1083"], 287: ["T1078"],
                         787: ["T1203"], 416: ["T1203"], 89: ["T1190"]}
        pool = [rec for rec in self.records if len(rec["labels"]) == 1
                and rec["labels"][0] in manual_labels and rec["id"] not in truth
                and not rec["id"].startswith("CVE-2021-4") and rec["id"] not in {c for c, *_ in LOG4J}]
        manual = []
        for cwe in sorted(manual_labels):
            cand = [rec for rec in pool if rec["labels"][0] == cwe]
            picks = r.sample(cand, 2 if cwe in (79, 787, 89) else 1)
            manual.extend((p["id"], manual_labels[cwe]) for p in picks)
        with open(os.path.join(out, "ground_truth.tsv"), "w") as f:
            f.write("# cve_id\tlabels\torigin\n")
            f.write("# procedure_example rows: CVEs named in technique procedure examples.\n")
            f.write("# manual rows: small hand-labelled sample built for this repository.\n")
            for cve in sorted(truth):
                f.write("%s\t%s\tprocedure_example\n" % (cve, ",".join(sorted(truth[cve]))))
            for cve, labels in sorted(manual):
                f.write("%s\t%s\tmanual\n" % (cve, ",".join(labels)))

    def write_nvd(self, out):
        by_year = collections.defaultdict(list)
        for rec in self.records:
            y = int(rec["id"][4:8])
            by_year[max(2002, y)].append(rec)
        for year in sorted(by_year):
            recs = by_year[year]
            if year == 2022:
                doc = {"resultsPerPage": len(recs), "startIndex": 0, "totalResults": len(recs),
                       "format": "NVD_CVE", "version": "2.0", "timestamp": "2022-06-15T03:00:00.000",
                       "vulnerabilities": [self.nvd20(rec) for rec in recs]}
                name = "nvdcve-2.0-2022.json.gz"
            else:
                doc = {"CVE_data_type": "CVE", "CVE_data_format": "MITRE", "CVE_data_version": "4.0",
                       "CVE_data_numberOfCVEs": str(len(recs)), "CVE_data_timestamp": "2022-06-15T03:00Z",
                       "CVE_Items": [self.nvd11(rec) for rec in recs]}
                name = "nvdcve-1.1-%d.json.gz" % year
            raw = json.dumps(doc, indent=None, separators=(",", ":")).encode()
            buf = io.BytesIO()
            with gzip.GzipFile(filename="", mode="wb", fileobj=buf, mtime=0, compresslevel=9) as gz:
                gz.write(raw)
            with open(os.path.join(out, "nvd", name), "wb") as f:
                f.write(buf.getvalue())

    @staticmethod
    def nvd11(rec):
        return {"cve": {"data_type": "CVE", "data_format": "MITRE", "data_version": "4.0",
                        "CVE_data_meta": {"ID": rec["id"], "ASSIGNER": "cve@mitre.org"},
                        "problemtype": {"problemtype_data": [
                            {"description": [{"lang": "en", "value": v} for v in rec["cwes"]]}]},
                        "references": {"reference_data": []},
                        "description": {"description_data": [{"lang": "en", "value": rec["description"]}]}},
                "configurations": {"CVE_data_version": "4.0", "nodes": []},
                "impact": {},
                "publishedDate": rec["published"] + "T15:15Z",
                "lastModifiedDate": rec["published"] + "T15:15Z"}

    @staticmethod
    def nvd20(rec):
        return {"cve": {"id": rec["id"], "sourceIdentifier": "cve@mitre.org",
                        "published": rec["published"] + "T15:15:08.997",
                        "lastModified": rec["published"] + "T15:15:08.997",
                        "vulnStatus": "Analyzed",
                        "descriptions": [{"lang": "en", "value": rec["description"]},
                                         {"lang": "es", "value": "Descripcion no disponible."}],
                        "weaknesses": [{"source": "nvd@nist.gov", "type": "Primary",
                                        "description": [{"lang": "en", "value": v} for v in rec["cwes"]]}],
                        "references": []}}

    def write_cwe(self, out):
        lines = ['<?xml version="1.0" encoding="UTF-8"?>',
                 '<Weakness_Catalog xmlns="http://cwe.mitre.org/cwe-6" Name="CWE" Version="4.7" '
                 'Date="2022-04-28">',
                 "   <Weaknesses>"]
        for c in sorted(self.cwes, key=lambda x: x["id"]):
            attrs = 'ID="%d" Name=%s Abstraction="%s" Structure="Simple" Status="%s"' % (
                c["id"], quoteattr(c["name"]), c["abstraction"], c["status"])
            lines.append("      <Weakness %s>" % attrs)
            desc = "The product exhibits the weakness: %s." % c["name"]
            if c["id"] in PROFILES:
                desc += " Typical reports describe it as %s." % PROFILES[c["id"]]["mech"][0]
            lines.append("         <Description>%s</Description>" % escape(desc))
            rel = []
            for i, p in enumerate(c["parents"]):
                rel.append('<Related_Weakness Nature="ChildOf" CWE_ID="%d" View_ID="1000" Ordinal="%s"/>'
                           % (p, "Primary" if i == 0 else "Secondary"))
            if c["id"] in (79, 787, 20):
                rel.append('<Related_Weakness Nature="ChildOf" CWE_ID="%d" View_ID="699"/>'
                           % {79: 137, 787: 1218, 20: 1215}[c["id"]])
            if c["id"] == 119:
                rel.append('<Related_Weakness Nature="CanPrecede" CWE_ID="416" View_ID="1000"/>')
            if c["parents"] and c["id"] in (121, 122, 125):
                rel.append('<Related_Weakness Nature="ChildOf" CWE_ID="119" View_ID="1003" Ordinal="Primary"/>')
            if rel:
                lines.append("         <Related_Weaknesses>")
                lines.extend("            " + x for x in rel)
                lines.append("         </Related_Weaknesses>")
            if c["alt_terms"]:
                lines.append("         <Alternate_Terms>")
                for a in c["alt_terms"]:
                    lines.append("            <Alternate_Term><Term>%s</Term><Description>Also known as "
                                 "%s.</Description></Alternate_Term>" % (escape(a), escape(a)))
                lines.append("         </Alternate_Terms>")
            lines.append("      </Weakness>")
        lines.append("   </Weaknesses>")
        lines.append("   <Categories>")
        for cid, name in CATEGORY_ROWS:
            status = "Deprecated" if name.startswith("DEPRECATED") else "Draft"
            lines.append('      <Category ID="%d" Name=%s Status="%s"><Summary>%s</Summary></Category>'
                         % (cid, quoteattr(name), status, escape(name)))
        lines.append("   </Categories>")
        lines.append("   <Views>")
        lines.append('      <View ID="1000" Name="Research Concepts" Type="Graph" Status="Draft">'
                     "<Objective>Organize weaknesses around abstractions of behavior.</Objective></View>")
        lines.append('      <View ID="699" Name="Software Development" Type="Graph" Status="Draft">'
                     "<Objective>Organize weaknesses around concepts familiar to developers.</Objective></View>")
        lines.append('      <View ID="1003" Name="Weaknesses for Simplified Mapping of Published '
                     'Vulnerabilities" Type="Graph" Status="Incomplete"><Objective>Simplified '
                     "mapping.</Objective></View>")
        lines.append("   </Views>")
        lines.append("</Weakness_Catalog>")
        with open(os.path.join(out, "cwec_v4.7.xml"), "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")

    def write_capec(self, out):
        lines = ['<?xml version="1.0" encoding="UTF-8"?>',
                 '<Attack_Pattern_Catalog xmlns="http://capec.mitre.org/capec-3" Name="CAPEC" '
                 'Version="3.7" Date="2022-02-22">',
                 "   <Attack_Patterns>"]
        for p in self.capec:
            lines.append('      <Attack_Pattern ID="%d" Name="Attack pattern %d" Abstraction="Standard" '
                         'Status="Draft">' % (p["id"], p["id"]))
            lines.append("         <Description>An adversary applies attack pattern %d.</Description>" % p["id"])
            if p["cwes"]:
                lines.append("         <Related_Weaknesses>")
                for c in p["cwes"]:
                    lines.append('            <Related_Weakness CWE_ID="%d"/>' % c)
                lines.append("         </Related_Weaknesses>")
            maps = []
            for t in p["techs"]:
                maps.append('<Taxonomy_Mapping Taxonomy_Name="ATTACK"><Entry_ID>%s</Entry_ID>'
                            "<Entry_Name>%s</Entry_Name></Taxonomy_Mapping>"
                            % (t[1:], escape(self.tech_by_id[t]["name"])))
            for b in p["bad"]:
                maps.append('<Taxonomy_Mapping Taxonomy_Name="ATTACK"><Entry_ID>%s</Entry_ID>'
                            "</Taxonomy_Mapping>" % escape(b))
            if p["id"] % 7 == 0:
                maps.append('<Taxonomy_Mapping Taxonomy_Name="WASC"><Entry_ID>%02d</Entry_ID>'
                            "<Entry_Name>Abuse</Entry_Name></Taxonomy_Mapping>" % (p["id"] % 50))
            if maps:
                lines.append("         <Taxonomy_Mappings>")
                lines.extend("            " + m for m in maps)
                lines.append("         </Taxonomy_Mappings>")
            lines.append("      </Attack_Pattern>")
        lines.append("   </Attack_Patterns>")
        lines.append("</Attack_Pattern_Catalog>")
        with open(os.path.join(out, "capec_v3.7.xml"), "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")

    def write_attack(self, out):
        created = "2017-05-31T21:30:19.735Z"
        modified = "2022-04-25T14:00:00.188Z"
        objs = []
        tech_ref = {}
        for t in self.techniques:
            ref = "attack-pattern--" + uid("technique", t["id"])
            tech_ref[t["id"]] = ref
            sub = "." in t["id"]
            desc = TECHNIQUE_TEXT.get(t["id"]) or (
                "Adversaries may use %s to %s. %s is commonly observed during intrusions."
                % (t["name"].lower(), TACTIC_GOALS[t["tactic"]], t["name"]))
            url = "https://attack.mitre.org/techniques/" + t["id"].replace(".", "/")
            objs.append({"type": "attack-pattern", "spec_version": "2.1", "id": ref,
                         "created": created, "modified": modified, "name": t["name"],
                         "description": desc,
                         "kill_chain_phases": [{"kill_chain_name": "mitre-attack", "phase_name": t["tactic"]}],
                         "external_references": [{"source_name": "mitre-attack", "external_id": t["id"],
                                                  "url": url}],
                         "x_mitre_is_subtechnique": sub, "x_mitre_domains": ["enterprise-attack"],
                         "x_mitre_version": "1.0"})
            if sub:
                parent = t["id"].split(".")[0]
                objs.append({"type": "relationship", "spec_version": "2.1",
                             "id": "relationship--" + uid("sub", t["id"]), "created": created,
                             "modified": modified, "relationship_type": "subtechnique-of",
                             "source_ref": ref, "target_ref": "attack-pattern--" + uid("technique", parent)})
        # Revoked and deprecated techniques are present in real bundles and must be dropped.
        for tid, name, flag in [("T1064", "Scripting", "revoked"), ("T1086", "PowerShell", "deprecated")]:
            ref = "attack-pattern--" + uid("technique", tid)
            tech_ref[tid] = ref
            o = {"type": "attack-pattern", "spec_version": "2.1", "id": ref, "created": created,
                 "modified": modified, "name": name, "description": "Legacy entry for %s." % name,
                 "external_references": [{"source_name": "mitre-attack", "external_id": tid}],
                 "x_mitre_domains": ["enterprise-attack"]}
            if flag == "revoked":
                o["revoked"] = True
            else:
                o["x_mitre_deprecated"] = True
            objs.append(o)
        group_ref = {}
        for g in self.groups:
            ref = "intrusion-set--" + uid("group", g["id"])
            group_ref[g["name"]] = ref
            o = {"type": "intrusion-set", "spec_version": "2.1", "id": ref, "created": created,
                 "modified": modified, "name": g["name"], "aliases": [g["name"]] + g["aliases"],
                 "description": "%s is a threat group tracked in the knowledge base." % g["name"],
                 "external_references": [{"source_name": "mitre-attack", "external_id": g["id"],
                                          "url": "https://attack.mitre.org/groups/" + g["id"]}],
                 "x_mitre_domains": ["enterprise-attack"]}
            if g["id"] in self.revoked_groups:
                o["revoked"] = True
            objs.append(o)
        for sid, kind, name in SOFTWARE:
            ref = "%s--%s" % (kind, uid("software", sid))
            group_ref[name] = ref
            objs.append({"type": kind, "spec_version": "2.1", "id": ref, "created": created,
                         "modified": modified, "name": name, "description": "%s is software." % name,
                         "external_references": [{"source_name": "mitre-attack", "external_id": sid}],
                         "x_mitre_domains": ["enterprise-attack"]})
        rels = []
        all_pairs = set()
        for n, ts in self.uses.items():
            for t in ts:
                all_pairs.add((n, t))
        for key in self.proc_rel:
            all_pairs.add(key)
        for n, t in sorted(all_pairs):
            gid = self.group_by_name[n]["id"] if n in self.group_by_name else None
            link = "[%s](https://attack.mitre.org/groups/%s)" % (n, gid) if gid else "[%s]" % n
            if (n, t) in self.proc_rel:
                desc = " ".join("%s %s" % (link, s) for s in self.proc_rel[(n, t)])
            else:
                desc = "%s has used %s during operations.(Citation: Report %s)" % (
                    link, self.tech_by_id[t]["name"], n)
            rels.append({"type": "relationship", "spec_version": "2.1",
                         "id": "relationship--" + uid("uses", n, t), "created": created,
                         "modified": modified, "relationship_type": "uses",
                         "source_ref": group_ref[n], "target_ref": tech_ref[t], "description": desc})
        # Relationships that point at revoked objects.
        for n, t in [("APT28", "T1064"), ("Turla", "T1086"), ("MONSOON (legacy)", "T1203")]:
            rels.append({"type": "relationship", "spec_version": "2.1",
                         "id": "relationship--" + uid("uses", n, t), "created": created,
                         "modified": modified, "relationship_type": "uses",
                         "source_ref": group_ref[n], "target_ref": tech_ref[t],
                         "description": "%s used legacy technique %s." % (n, t)})
        objs.extend(rels)
        objs.append({"type": "x-mitre-collection", "spec_version": "2.1",
                     "id": "x-mitre-collection--" + uid("collection"), "created": created,
                     "modified": modified, "name": "Enterprise ATT&CK", "x_mitre_version": "11.3"})
        bundle = {"type": "bundle", "id": "bundle--" + uid("bundle"), "objects": objs}
        with open(os.path.join(out, "enterprise-attack-11.3.json"), "w") as f:
            json.dump(bundle, f, indent=1, sort_keys=True)
            f.write("\n")


def main():
    if len(sys.argv) != 2:
        print(__doc__)
        return 2
    out = sys.argv[1]
    gen = Gen()
    gen.build_cves()
    gen.build_capec()
    gen.build_usage()
    gen.verify_chains()
    gen.write_all(out)
    print("records:", len(gen.records))
    return 0


if __name__ == "__main__":
    sys.exit(main())
