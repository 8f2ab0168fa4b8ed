"""Enterprise ATT&CK techniques and groups used by the fixture generator.

Technique rows: id | name | tactic.  Group rows: id | name | aliases (';').
"""

TECHNIQUE_ROWS = r"""
T1001|Data Obfuscation|command-and-control
T1003|OS Credential Dumping|credential-access
T1003.001|LSASS Memory|credential-access
T1003.002|Security Account Manager|credential-access
T1003.003|NTDS|credential-access
T1005|Data from Local System|collection
T1007|System Service Discovery|discovery
T1008|Fallback Channels|command-and-control
T1010|Application Window Discovery|discovery
T1012|Query Registry|discovery
T1014|Rootkit|defense-evasion
T1016|System Network Configuration Discovery|discovery
T1018|Remote System Discovery|discovery
T1020|Automated Exfiltration|exfiltration
T1021|Remote Services|lateral-movement
T1021.001|Remote Desktop Protocol|lateral-movement
T1021.002|SMB/Windows Admin Shares|lateral-movement
T1021.004|SSH|lateral-movement
T1025|Data from Removable Media|collection
T1027|Obfuscated Files or Information|defense-evasion
T1027.002|Software Packing|defense-evasion
T1029|Scheduled Transfer|exfiltration
T1030|Data Transfer Size Limits|exfiltration
T1033|System Owner/User Discovery|discovery
T1036|Masquerading|defense-evasion
T1036.005|Match Legitimate Name or Location|defense-evasion
T1037|Boot or Logon Initialization Scripts|persistence
T1037.001|Logon Script (Windows)|persistence
T1039|Data from Network Shared Drive|collection
T1040|Network Sniffing|credential-access
T1041|Exfiltration Over C2 Channel|exfiltration
T1046|Network Service Discovery|discovery
T1047|Windows Management Instrumentation|execution
T1048|Exfiltration Over Alternative Protocol|exfiltration
T1049|System Network Connections Discovery|discovery
T1053|Scheduled Task/Job|execution
T1053.003|Cron|execution
T1053.005|Scheduled Task|execution
T1055|Process Injection|defense-evasion
T1055.001|Dynamic-link Library Injection|defense-evasion
T1055.012|Process Hollowing|defense-evasion
T1056|Input Capture|collection
T1056.001|Keylogging|collection
T1057|Process Discovery|discovery
T1059|Command and Scripting Interpreter|execution
T1059.001|PowerShell|execution
T1059.003|Windows Command Shell|execution
T1059.005|Visual Basic|execution
T1059.007|JavaScript|execution
T1068|Exploitation for Privilege Escalation|privilege-escalation
T1069|Permission Groups Discovery|discovery
T1070|Indicator Removal on Host|defense-evasion
T1070.004|File Deletion|defense-evasion
T1071|Application Layer Protocol|command-and-control
T1071.001|Web Protocols|command-and-control
T1072|Software Deployment Tools|execution
T1074|Data Staged|collection
T1078|Valid Accounts|defense-evasion
T1078.001|Default Accounts|defense-evasion
T1078.002|Domain Accounts|defense-evasion
T1078.003|Local Accounts|defense-evasion
T1080|Taint Shared Content|lateral-movement
T1082|System Information Discovery|discovery
T1083|File and Directory Discovery|discovery
T1087|Account Discovery|discovery
T1090|Proxy|command-and-control
T1091|Replication Through Removable Media|lateral-movement
T1092|Communication Through Removable Media|command-and-control
T1095|Non-Application Layer Protocol|command-and-control
T1098|Account Manipulation|persistence
T1102|Web Service|command-and-control
T1104|Multi-Stage Channels|command-and-control
T1105|Ingress Tool Transfer|command-and-control
T1106|Native API|execution
T1110|Brute Force|credential-access
T1110.001|Password Guessing|credential-access
T1110.003|Password Spraying|credential-access
T1111|Two-Factor Authentication Interception|credential-access
T1112|Modify Registry|defense-evasion
T1113|Screen Capture|collection
T1114|Email Collection|collection
T1115|Clipboard Data|collection
T1119|Automated Collection|collection
T1120|Peripheral Device Discovery|discovery
T1123|Audio Capture|collection
T1124|System Time Discovery|discovery
T1125|Video Capture|collection
T1127|Trusted Developer Utilities Proxy Execution|defense-evasion
T1129|Shared Modules|execution
T1132|Data Encoding|command-and-control
T1133|External Remote Services|initial-access
T1134|Access Token Manipulation|privilege-escalation
T1134.001|Token Impersonation/Theft|privilege-escalation
T1134.002|Create Process with Token|privilege-escalation
T1134.003|Make and Impersonate Token|privilege-escalation
T1135|Network Share Discovery|discovery
T1136|Create Account|persistence
T1136.001|Local Account|persistence
T1137|Office Application Startup|persistence
T1140|Deobfuscate/Decode Files or Information|defense-evasion
T1176|Browser Extensions|persistence
T1185|Browser Session Hijacking|collection
T1187|Forced Authentication|credential-access
T1189|Drive-by Compromise|initial-access
T1190|Exploit Public-Facing Application|initial-access
T1195|Supply Chain Compromise|initial-access
T1195.002|Compromise Software Supply Chain|initial-access
T1197|BITS Jobs|defense-evasion
T1199|Trusted Relationship|initial-access
T1200|Hardware Additions|initial-access
T1201|Password Policy Discovery|discovery
T1202|Indirect Command Execution|defense-evasion
T1203|Exploitation for Client Execution|execution
T1204|User Execution|execution
T1204.002|Malicious File|execution
T1205|Traffic Signaling|defense-evasion
T1207|Rogue Domain Controller|defense-evasion
T1210|Exploitation of Remote Services|lateral-movement
T1211|Exploitation for Defense Evasion|defense-evasion
T1212|Exploitation for Credential Access|credential-access
T1213|Data from Information Repositories|collection
T1216|Signed Script Proxy Execution|defense-evasion
T1217|Browser Bookmark Discovery|discovery
T1218|System Binary Proxy Execution|defense-evasion
T1218.011|Rundll32|defense-evasion
T1219|Remote Access Software|command-and-control
T1220|XSL Script Processing|defense-evasion
T1221|Template Injection|defense-evasion
T1222|File and Directory Permissions Modification|defense-evasion
T1222.001|Windows File and Directory Permissions Modification|defense-evasion
T1222.002|Linux and Mac File and Directory Permissions Modification|defense-evasion
T1480|Execution Guardrails|defense-evasion
T1482|Domain Trust Discovery|discovery
T1484|Domain Policy Modification|defense-evasion
T1485|Data Destruction|impact
T1486|Data Encrypted for Impact|impact
T1489|Service Stop|impact
T1490|Inhibit System Recovery|impact
T1491|Defacement|impact
T1495|Firmware Corruption|impact
T1496|Resource Hijacking|impact
T1497|Virtualization/Sandbox Evasion|defense-evasion
T1498|Network Denial of Service|impact
T1499|Endpoint Denial of Service|impact
T1505|Server Software Component|persistence
T1505.003|Web Shell|persistence
T1518|Software Discovery|discovery
T1525|Implant Internal Image|persistence
T1528|Steal Application Access Token|credential-access
T1529|System Shutdown/Reboot|impact
T1530|Data from Cloud Storage Object|collection
T1531|Account Access Removal|impact
T1534|Internal Spearphishing|lateral-movement
T1538|Cloud Service Dashboard|discovery
T1539|Steal Web Session Cookie|credential-access
T1542|Pre-OS Boot|defense-evasion
T1543|Create or Modify System Process|persistence
T1543.003|Windows Service|persistence
T1546|Event Triggered Execution|persistence
T1546.001|Change Default File Association|persistence
T1546.008|Accessibility Features|persistence
T1547|Boot or Logon Autostart Execution|persistence
T1547.001|Registry Run Keys / Startup Folder|persistence
T1548|Abuse Elevation Control Mechanism|privilege-escalation
T1548.001|Setuid and Setgid|privilege-escalation
T1548.002|Bypass User Account Control|privilege-escalation
T1548.003|Sudo and Sudo Caching|privilege-escalation
T1550|Use Alternate Authentication Material|defense-evasion
T1550.001|Application Access Token|defense-evasion
T1550.002|Pass the Hash|defense-evasion
T1550.004|Web Session Cookie|defense-evasion
T1552|Unsecured Credentials|credential-access
T1552.001|Credentials In Files|credential-access
T1553|Subvert Trust Controls|defense-evasion
T1553.002|Code Signing|defense-evasion
T1554|Compromise Client Software Binary|persistence
T1555|Credentials from Password Stores|credential-access
T1556|Modify Authentication Process|credential-access
T1557|Adversary-in-the-Middle|credential-access
T1557.001|LLMNR/NBT-NS Poisoning and SMB Relay|credential-access
T1558|Steal or Forge Kerberos Tickets|credential-access
T1559|Inter-Process Communication|execution
T1559.001|Component Object Model|execution
T1559.002|Dynamic Data Exchange|execution
T1560|Archive Collected Data|collection
T1561|Disk Wipe|impact
T1562|Impair Defenses|defense-evasion
T1562.001|Disable or Modify Tools|defense-evasion
T1562.003|Impair Command History Logging|defense-evasion
T1563|Remote Service Session Hijacking|lateral-movement
T1564|Hide Artifacts|defense-evasion
T1565|Data Manipulation|impact
T1565.001|Stored Data Manipulation|impact
T1566|Phishing|initial-access
T1566.001|Spearphishing Attachment|initial-access
T1566.002|Spearphishing Link|initial-access
T1567|Exfiltration Over Web Service|exfiltration
T1568|Dynamic Resolution|command-and-control
T1569|System Services|execution
T1569.002|Service Execution|execution
T1570|Lateral Tool Transfer|lateral-movement
T1571|Non-Standard Port|command-and-control
T1572|Protocol Tunneling|command-and-control
T1573|Encrypted Channel|command-and-control
T1574|Hijack Execution Flow|persistence
T1574.001|DLL Search Order Hijacking|persistence
T1574.002|DLL Side-Loading|persistence
T1574.004|Dylib Hijacking|persistence
T1574.005|Executable Installer File Permissions Weakness|persistence
T1574.006|Dynamic Linker Hijacking|persistence
T1574.007|Path Interception by PATH Environment Variable|persistence
T1574.008|Path Interception by Search Order Hijacking|persistence
T1574.009|Path Interception by Unquoted Path|persistence
T1574.010|Services File Permissions Weakness|persistence
T1574.011|Services Registry Permissions Weakness|persistence
T1574.012|COR_PROFILER|persistence
T1578|Modify Cloud Compute Infrastructure|defense-evasion
T1580|Cloud Infrastructure Discovery|discovery
T1583|Acquire Infrastructure|resource-development
T1584|Compromise Infrastructure|resource-development
T1585|Establish Accounts|resource-development
T1586|Compromise Accounts|resource-development
T1587|Develop Capabilities|resource-development
T1588|Obtain Capabilities|resource-development
T1588.002|Tool|resource-development
T1589|Gather Victim Identity Information|reconnaissance
T1590|Gather Victim Network Information|reconnaissance
T1591|Gather Victim Org Information|reconnaissance
T1592|Gather Victim Host Information|reconnaissance
T1593|Search Open Websites/Domains|reconnaissance
T1594|Search Victim-Owned Websites|reconnaissance
T1595|Active Scanning|reconnaissance
T1595.002|Vulnerability Scanning|reconnaissance
T1596|Search Open Technical Databases|reconnaissance
T1597|Search Closed Sources|reconnaissance
T1598|Phishing for Information|reconnaissance
T1599|Network Boundary Bridging|defense-evasion
T1600|Weaken Encryption|defense-evasion
T1601|Modify System Image|defense-evasion
T1602|Data from Configuration Repository|collection
T1606|Forge Web Credentials|credential-access
T1606.001|Web Cookies|credential-access
T1608|Stage Capabilities|resource-development
T1609|Container Administration Command|execution
T1610|Deploy Container|execution
T1611|Escape to Host|privilege-escalation
T1612|Build Image on Host|defense-evasion
T1613|Container and Resource Discovery|discovery
T1614|System Location Discovery|discovery
T1615|Group Policy Discovery|discovery
T1619|Cloud Storage Object Discovery|discovery
T1620|Reflective Code Loading|defense-evasion
T1621|Multi-Factor Authentication Request Generation|credential-access
T1622|Debugger Evasion|defense-evasion
T1647|Plist File Modification|defense-evasion
"""

GROUP_ROWS = r"""
G0007|APT28|Sofacy;Fancy Bear;STRONTIUM;Sednit;Pawn Storm
G0016|APT29|Cozy Bear;NOBELIUM;YTTRIUM;The Dukes
G0067|APT37|ScarCruft;Reaper;Group123
G0032|Lazarus Group|HIDDEN COBRA;ZINC;Guardians of Peace
G0125|HAFNIUM|Operation Exchange Marauder
G0096|APT41|Wicked Panda;BARIUM
G0059|Magic Hound|Phosphorus;Charming Kitten;APT35;TA453
G0069|MuddyWater|Seedworm;TEMP.Zagros;MERCURY
G0117|Fox Kitten|UNC757;Parisite;PIONEER KITTEN
G0006|APT1|Comment Crew;Comment Panda
G0005|APT12|IXESHE;DynCalc
G0023|APT16|
G0025|APT17|Deputy Dog
G0026|APT18|TG-0416;Dynamite Panda
G0073|APT19|Codoso;C0d0so0
G0022|APT3|Gothic Panda;Pirpi;UPS Team
G0050|APT32|SeaLotus;OceanLotus;APT-C-00
G0064|APT33|HOLMIUM;Elfin
G0087|APT39|Chafer;ITG07
G0082|APT38|BeagleBoyz;Bluenoroff
G0013|APT30|
G0018|admin@338|
G0130|Ajax Security Team|Operation Woolen-Goldfish
G0138|Andariel|Silent Chollima
G0099|APT-C-36|Blind Eagle
G0001|Axiom|Group 72
G0135|BackdoorDiplomacy|
G0098|BlackTech|Palmerworm
G0108|Blue Mockingbird|
G0060|BRONZE BUTLER|REDBALDKNIGHT;Tick
G0008|Carbanak|Anunak
G0114|Chimera|
G0003|Cleaver|Operation Cleaver;TG-2889
G0052|CopyKittens|
G0070|Dark Caracal|
G0012|Darkhotel|DUBNIUM
G0079|DarkHydrus|
G0105|DarkVishnya|
G0009|Deep Panda|Shell Crew;Black Vine
G0035|Dragonfly|Energetic Bear;DYMALLOY
G0017|DragonOK|
G0066|Elderwood|Elderwood Gang;Beijing Group
G0137|Ferocious Kitten|
G0051|FIN10|
G0053|FIN5|
G0037|FIN6|SKELETON SPIDER;ITG08
G0046|FIN7|GOLD NIAGARA;ITG14
G0061|FIN8|
G0078|Gorgon Group|
G0043|Group5|
G0126|Higaisa|
G0100|Inception|Inception Framework;Cloud Atlas
G0136|IndigoZebra|
G0119|Indrik Spider|Evil Corp
G0004|Ke3chang|APT15;Mirage;Vixen Panda
G0094|Kimsuky|STOLEN PENCIL;Velvet Chollima
G0030|Lotus Blossom|DRAGONFISH;Spring Dragon
G0095|Machete|APT-C-43;El Machete
G0045|menuPass|Cicada;POTASSIUM;Stone Panda;APT10
G0021|Molerats|Operation Molerats;Gaza Cybergang
G0129|Mustang Panda|TA416;RedDelta;BRONZE PRESIDENT
G0019|Naikon|
G0055|NEODYMIUM|
G0048|RTM|
G0049|OilRig|COBALT GYPSY;IRN2;APT34;Helix Kitten
G0071|Orangeworm|
G0040|Patchwork|Dropping Elephant;Chinastrats;MONSOON
G0011|PittyTiger|
G0068|PLATINUM|
G0033|Poseidon Group|
G0024|Putter Panda|APT2;MSUpdater
G0075|Rancor|
G0106|Rocke|
G0034|Sandworm Team|ELECTRUM;Telebots;IRON VIKING;BlackEnergy (Group);Quedagh;VOODOO BEAR
G0091|Silence|Whisper Spider
G0121|Sidewinder|T-APT-04;Rattlesnake
G0083|SilverTerrier|
G0054|Sowbug|
G0038|Stealth Falcon|
G0039|Suckfly|
G0062|TA459|
G0092|TA505|
G0127|TA551|GOLD CABIN;Shathak
G0088|TEMP.Veles|XENOTIME
G0027|Threat Group-3390|Earth Smilodon;TG-3390;Emissary Panda;BRONZE UNION;APT27;Iron Tiger;LuckyMouse
G0076|Thrip|
G0131|Tonto Team|Earth Akhlut;BRONZE HUNTLEY;CactusPete;Karma Panda
G0081|Tropic Trooper|Pirate Panda;KeyBoy
G0010|Turla|IRON HUNTER;Group 88;Waterbug;WhiteBear;Snake;Krypton;Venomous Bear
G0123|Volatile Cedar|Lebanese Cedar
G0107|Whitefly|
G0090|WIRTE|
G0102|Wizard Spider|UNC1878;TEMP.MixMaster;Grim Spider
G0128|ZIRCONIUM|APT31
G0124|Windigo|
G0112|Windshift|Bahamut
G0044|Winnti Group|Blackfly
G0080|Cobalt Group|GOLD KINGSWOOD;Cobalt Gang;Cobalt Spider
G0120|Evilnum|
G0085|FIN4|
G0115|GOLD SOUTHFIELD|
G0093|GALLIUM|
G0084|Gallmaker|
G0047|Gamaredon Group|
G0036|GCMAN|
G0041|Strider|ProjectSauron
G0056|PROMETHIUM|StrongPity
G0065|Leviathan|MUDCARP;Kryptonite Panda;Gadolinium;BRONZE MOHAWK;TEMP.Jumper;APT40;TEMP.Periscope
G0077|Leafminer|Raspite
G0029|Scarlet Mimic|
G0063|BlackOasis|
G0089|The White Company|
G0097|Bouncing Golf|
G0103|Mofang|
G0101|Frankenstein|
G0116|Operation Wocao|
G0122|Silent Librarian|TA407;COBALT DICKENS
G0133|Nomadic Octopus|DustSquad
G0134|Transparent Tribe|COPPER FIELDSTONE;APT36;Mythic Leopard;ProjectM
G0139|TeamTNT|
G0140|LazyScripter|
G0002|Moafee|
G0015|Taidoor|
G0020|Equation|
G0028|Threat Group-1314|
G0031|Dust Storm|
G0042|MONSOON (legacy)|
G0057|Suckfly (legacy)|
G0058|Charming Kitten (legacy)|
G0086|Stolen Pencil (legacy)|
G0104|Bouncing Golf (legacy)|
G0109|Night Dragon|
G0110|Volt Cluster|
G0111|Lotus Panda|
G0113|Ember Bear|
G0118|Storm Cloud|
G0132|Sharp Panda|
"""


def parse_techniques():
    out = []
    for line in TECHNIQUE_ROWS.strip().splitlines():
        tid, name, tactic = line.split("|")
        out.append({"id": tid, "name": name, "tactic": tactic})
    return out


def parse_groups():
    out = []
    for line in GROUP_ROWS.strip().splitlines():
        gid, name, aliases = line.split("|")
        out.append({"id": gid, "name": name,
                    "aliases": [a for a in aliases.split(";") if a]})
    return out
