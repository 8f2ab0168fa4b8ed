"""Phrase banks used to write CVE-style descriptions for each labelled weakness.

Each profile: mech (the weakness phrase), impact (what the attacker gets),
vec (how input reaches the flaw).  Weaknesses without a profile are described
from their catalog name and alternate terms.
"""

ACTORS = ["remote attackers", "a remote attacker", "remote authenticated users",
          "an unauthenticated attacker", "local users", "attackers",
          "a local attacker", "an authenticated user", "context-dependent attackers",
          "a remote unauthenticated attacker"]

COMPONENTS = ["the login page", "the admin panel", "the image parser", "the file manager module",
              "the REST API", "the web interface", "the PDF renderer", "the font engine",
              "the network stack", "the kernel driver", "the configuration utility",
              "the backup service", "the update mechanism", "the media decoder",
              "the search function", "the plugin loader", "the template engine",
              "the user profile page", "the print spooler", "the scripting engine",
              "the USB handler", "the SMB server", "the DNS resolver", "the XML parser",
              "the JSON handler", "the archive extractor", "the certificate store",
              "the session manager", "the report generator", "the email client",
              "the management console", "the firmware", "the VPN gateway",
              "the web server", "the database connector", "the logging subsystem"]

VENDORS = ["Acme", "Contoso", "Globex", "Initech", "Umbrella", "Hooli", "Vandelay",
           "Stark", "Wayne", "Cyberdyne", "Tyrell", "Soylent", "Aperture", "Oscorp",
           "Wonka", "Gringotts", "Monarch", "Nakatomi", "Virtucon", "Zorg", "Dunder",
           "Pied", "Massive", "Blue Sun", "Gekko", "Veridian", "Ollivander", "Sirius",
           "Nexus", "Orbit", "Helix", "Quantum", "Vector", "Zenith", "Apex", "Lumen"]

PRODUCTS = ["Portal", "Server", "Router", "Gateway", "CMS", "Mail", "Office Suite",
            "Browser", "Reader", "Player", "Firewall", "Switch", "Camera", "NAS",
            "Framework", "Library", "Agent", "Manager", "Studio", "Cloud", "Phone OS",
            "Hypervisor", "Directory", "Wiki", "Forum", "Shop", "ERP", "CRM", "Printer",
            "Controller", "Scanner", "Editor", "Viewer", "Engine", "Kernel", "Shell"]

GENERIC_IMPACTS = ["cause a denial of service", "execute arbitrary code",
                   "obtain sensitive information", "gain privileges",
                   "bypass intended access restrictions", "have unspecified other impact",
                   "modify data", "cause a denial of service (application crash)"]

VECTORS = ["a crafted request", "a crafted file", "the id parameter", "a crafted URL",
           "a malformed packet", "a crafted HTTP header", "the name parameter",
           "a specially crafted document", "a crafted image", "the search field",
           "a crafted archive", "a crafted API call", "the filename argument",
           "a crafted message", "unspecified vectors"]

PROFILES = {
    20: dict(
        mech=["does not properly validate input", "improper input validation",
              "fails to validate user-supplied input", "insufficient validation of untrusted input",
              "does not validate the length field of a message", "lacks proper validation of parameters",
              "improper validation of input values", "does not check input for unexpected values"],
        impact=["cause a denial of service or possibly have unspecified other impact",
                "cause unexpected behavior", "crash the service", "execute arbitrary code"]),
    22: dict(
        mech=["directory traversal vulnerability", "path traversal vulnerability",
              "does not sanitize ../ sequences in file paths", "allows .. (dot dot) in the path parameter",
              "absolute path traversal", "improper limitation of a pathname to a restricted directory"],
        impact=["read arbitrary files", "write arbitrary files outside the intended directory",
                "access files outside the web root", "read arbitrary files via a .. (dot dot) sequence"]),
    59: dict(
        mech=["symlink attack on a temporary file", "follows symbolic links",
              "improper link resolution before file access", "symlink following",
              "hard link attack", "does not check for symbolic links before writing"],
        impact=["overwrite arbitrary files", "gain privileges by overwriting files",
                "delete arbitrary files via a symlink"]),
    78: dict(
        mech=["OS command injection", "shell injection vulnerability",
              "passes unsanitized input to a system() call", "allows shell metacharacters in a parameter",
              "command injection in the ping diagnostic page", "shell metacharacters injection"],
        impact=["execute arbitrary operating system commands", "execute arbitrary commands as root",
                "execute arbitrary shell commands"]),
    79: dict(
        mech=["cross-site scripting (XSS) vulnerability", "reflected cross-site scripting",
              "stored XSS vulnerability", "does not sanitize HTML in user comments",
              "DOM-based cross-site scripting", "XSS vulnerability"],
        impact=["inject arbitrary web script or HTML", "execute JavaScript in the browser of a victim",
                "inject arbitrary web script or HTML via the title field"]),
    89: dict(
        mech=["SQL injection vulnerability", "blind SQL injection",
              "does not sanitize input used in SQL queries", "SQLi in the login form",
              "time-based SQL injection"],
        impact=["execute arbitrary SQL commands", "read the contents of the database",
                "execute arbitrary SQL commands via the id parameter"]),
    94: dict(
        mech=["code injection vulnerability", "eval injection", "allows injection of PHP code",
              "improper control of generation of code", "server-side template injection",
              "static code injection"],
        impact=["execute arbitrary code", "execute arbitrary PHP code",
                "execute arbitrary script code on the server"]),
    98: dict(
        mech=["PHP remote file inclusion vulnerability", "remote file include",
              "local file inclusion in an include statement", "RFI vulnerability",
              "include statement accepts a URL in the path parameter"],
        impact=["execute arbitrary PHP code via a URL in the path parameter",
                "include and execute arbitrary local files"]),
    119: dict(
        mech=["buffer overflow", "buffer overrun", "memory safety violation",
              "improper restriction of operations within the bounds of a memory buffer",
              "buffer overflow in the parsing routine"],
        impact=["execute arbitrary code or cause a denial of service (memory corruption)",
                "cause a denial of service (memory corruption) or execute arbitrary code"]),
    121: dict(
        mech=["stack-based buffer overflow", "stack overflow in the parsing function",
              "stack buffer overflow", "stack-based overflow when copying a string"],
        impact=["execute arbitrary code via a long string", "execute arbitrary code",
                "cause a denial of service (crash) or execute arbitrary code"]),
    122: dict(
        mech=["heap-based buffer overflow", "heap overflow", "heap buffer overflow",
              "heap-based overflow when decoding data"],
        impact=["execute arbitrary code", "cause a denial of service (heap corruption)",
                "execute arbitrary code via crafted dimensions"]),
    125: dict(
        mech=["out-of-bounds read", "buffer over-read", "reads past the end of a buffer",
              "OOB read when parsing headers", "out of bounds read"],
        impact=["obtain sensitive information from process memory",
                "cause a denial of service (application crash)", "disclose memory contents"]),
    190: dict(
        mech=["integer overflow", "integer wraparound", "arithmetic overflow when computing a size",
              "integer overflow in the allocation size calculation"],
        impact=["cause a denial of service or execute arbitrary code via large values",
                "trigger an undersized allocation"]),
    200: dict(
        mech=["information disclosure vulnerability", "exposes sensitive information",
              "information leak", "discloses internal configuration details",
              "exposure of sensitive information to an unauthorized actor"],
        impact=["obtain sensitive information", "obtain credentials and internal paths",
                "read private user data"]),
    287: dict(
        mech=["improper authentication", "authentication bypass",
              "does not properly authenticate requests", "fails to verify credentials",
              "authentication can be bypassed with a crafted token"],
        impact=["bypass authentication and gain administrative access",
                "log in without valid credentials", "access protected functionality"]),
    352: dict(
        mech=["cross-site request forgery (CSRF) vulnerability", "CSRF vulnerability",
              "lacks anti-CSRF tokens", "XSRF vulnerability", "session riding"],
        impact=["hijack the authentication of administrators for requests that change settings",
                "hijack the authentication of users for requests that add accounts"]),
    416: dict(
        mech=["use-after-free", "use after free vulnerability", "dangling pointer",
              "use-after-free in the layout engine", "memory is used after being freed"],
        impact=["execute arbitrary code via a crafted web site",
                "execute arbitrary code or cause a denial of service (heap memory corruption)"]),
    434: dict(
        mech=["unrestricted file upload", "allows upload of files with dangerous types",
              "does not restrict file extensions on upload", "unrestricted upload of a file with a dangerous type"],
        impact=["execute arbitrary code by uploading a file with an executable extension",
                "upload a web shell and execute it"]),
    451: dict(
        mech=["address bar spoofing", "user interface misrepresentation",
              "URL spoofing issue", "incorrect security UI", "origin spoofing in the omnibox"],
        impact=["spoof the contents of the address bar", "conduct phishing attacks via a crafted page",
                "mislead users about the origin of a page"]),
    476: dict(
        mech=["NULL pointer dereference", "null pointer dereference",
              "dereferences a NULL pointer", "NULL pointer dereference in the handler"],
        impact=["cause a denial of service (crash)", "cause a denial of service (system crash)"]),
    618: dict(
        mech=["unsafe ActiveX control", "ActiveX control marked safe for scripting",
              "exposed unsafe ActiveX method", "insecure ActiveX method"],
        impact=["execute arbitrary code via a crafted web page",
                "overwrite arbitrary files via the ActiveX control"]),
    787: dict(
        mech=["out-of-bounds write", "writes past the end of an allocated buffer",
              "out of bounds write", "out-of-bounds write in the decoder"],
        impact=["cause memory corruption and execute arbitrary code",
                "execute arbitrary code", "cause a denial of service (memory corruption)"]),
    400: dict(
        mech=["uncontrolled resource consumption", "resource exhaustion",
              "excessive CPU consumption", "does not limit resource consumption"],
        impact=["cause a denial of service (resource exhaustion)", "cause a denial of service (CPU consumption)"]),
    269: dict(
        mech=["improper privilege management", "does not drop privileges",
              "privilege management flaw", "runs helper with excessive privileges"],
        impact=["gain elevated privileges", "gain root privileges"]),
    862: dict(
        mech=["missing authorization check", "does not perform an authorization check",
              "missing authorization"],
        impact=["access administrative functions", "modify other users' settings"]),
    863: dict(
        mech=["incorrect authorization", "authorization checks can be bypassed",
              "incorrect authorization logic"],
        impact=["access resources of other tenants", "perform restricted actions"]),
    77: dict(
        mech=["command injection vulnerability", "improper neutralization of special elements used in a command",
              "command injection"],
        impact=["execute arbitrary commands", "inject commands into the backend"]),
    611: dict(
        mech=["XML external entity (XXE) vulnerability", "XXE injection",
              "does not restrict XML external entity references"],
        impact=["read arbitrary files via an XML document", "conduct server-side request forgery via XXE"]),
    918: dict(
        mech=["server-side request forgery (SSRF)", "SSRF vulnerability",
              "server-side request forgery in the URL preview feature"],
        impact=["send requests to internal services", "scan internal networks"]),
    502: dict(
        mech=["deserialization of untrusted data", "unsafe deserialization",
              "insecure deserialization of Java objects", "PHP object injection"],
        impact=["execute arbitrary code via a crafted serialized object",
                "execute arbitrary code"]),
    798: dict(
        mech=["hard-coded credentials", "hardcoded password", "use of hard-coded credentials",
              "hard-coded cryptographic key"],
        impact=["gain administrative access using the default account", "decrypt stored secrets"]),
    306: dict(
        mech=["missing authentication for a critical function", "does not require authentication",
              "no authentication for critical function"],
        impact=["reconfigure the device", "reboot the device"]),
    295: dict(
        mech=["improper certificate validation", "does not verify X.509 certificates",
              "does not validate the server certificate"],
        impact=["perform man-in-the-middle attacks", "spoof servers and obtain sensitive information"]),
    601: dict(
        mech=["open redirect vulnerability", "URL redirection to untrusted site",
              "open redirect"],
        impact=["redirect users to arbitrary web sites and conduct phishing attacks"]),
    522: dict(
        mech=["insufficiently protected credentials", "stores credentials in recoverable format",
              "transmits credentials with weak protection"],
        impact=["obtain user passwords", "recover stored credentials"]),
    732: dict(
        mech=["incorrect permission assignment for a critical resource", "world-writable permissions",
              "insecure permissions on the configuration file"],
        impact=["modify configuration and gain privileges", "read secret keys"]),
    668: dict(
        mech=["exposure of resource to wrong sphere", "exposes an internal resource to other users",
              "resource exposed to untrusted sphere"],
        impact=["access internal resources", "interfere with other users' data"]),
    835: dict(
        mech=["infinite loop", "loop with unreachable exit condition",
              "infinite loop when parsing a crafted packet"],
        impact=["cause a denial of service (infinite loop)", "cause a denial of service (CPU hang)"]),
    770: dict(
        mech=["allocation of resources without limits", "does not throttle allocations",
              "unbounded memory allocation"],
        impact=["cause a denial of service (memory exhaustion)"]),
    74: dict(
        mech=["injection vulnerability", "improper neutralization of special elements in output",
              "header injection", "injection of special elements into a downstream component"],
        impact=["inject content into downstream components", "manipulate the generated output"]),
    362: dict(
        mech=["race condition", "concurrent execution using shared resource with improper synchronization",
              "race condition in the handler"],
        impact=["gain privileges via a race", "cause a denial of service via concurrent requests"]),
    276: dict(
        mech=["incorrect default permissions", "installs files with insecure default permissions",
              "default permissions allow write access"],
        impact=["gain privileges by replacing binaries", "modify installed files"]),
    319: dict(
        mech=["cleartext transmission of sensitive information", "sends credentials in cleartext",
              "transmits data without encryption"],
        impact=["sniff credentials on the network", "obtain sensitive information by sniffing"]),
    327: dict(
        mech=["use of a broken cryptographic algorithm", "uses a risky cryptographic algorithm",
              "uses DES for encryption"],
        impact=["decrypt protected data", "forge signatures"]),
    326: dict(
        mech=["inadequate encryption strength", "uses weak encryption keys",
              "uses short RSA keys"],
        impact=["brute force encrypted data", "decrypt traffic"]),
    209: dict(
        mech=["error message containing sensitive information", "verbose error messages",
              "stack traces in error responses"],
        impact=["obtain sensitive information from error messages"]),
    532: dict(
        mech=["insertion of sensitive information into log file", "logs passwords in cleartext",
              "writes tokens to the log file"],
        impact=["obtain credentials by reading log files"]),
    401: dict(
        mech=["memory leak", "missing release of memory", "memory leak in the handler"],
        impact=["cause a denial of service (memory consumption)"]),
    617: dict(
        mech=["reachable assertion", "assertion failure", "triggers an assertion"],
        impact=["cause a denial of service (daemon exit)"]),
    674: dict(
        mech=["uncontrolled recursion", "unbounded recursion when parsing nested data",
              "recursion without depth limit"],
        impact=["cause a denial of service (stack consumption)"]),
    843: dict(
        mech=["type confusion", "object type confusion", "type confusion in the JavaScript engine"],
        impact=["execute arbitrary code via a crafted web page"]),
}

# Pairs of weaknesses whose wording is easily confused; used to inject noise.
CONFUSERS = {
    119: [787, 125, 120], 787: [119, 122, 121], 121: [787, 119], 122: [787, 119],
    125: [119, 200], 416: [119, 787], 476: [20, 416], 20: [119, 400, 74],
    79: [74, 352], 89: [74, 20], 78: [77, 94], 94: [78, 74], 22: [200, 59],
    59: [22, 362], 98: [94, 22], 200: [209, 532], 287: [306, 863], 352: [79, 287],
    434: [94, 22], 451: [79, 200], 618: [94, 119], 190: [119, 787],
}
