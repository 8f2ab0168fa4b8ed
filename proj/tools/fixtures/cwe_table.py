"""CWE weakness rows used by the fixture generator.

Each row: id | name | parents in the Research Concepts view | abstraction | status | alternate terms
Parents are space separated; alternate terms are separated by ';'.
"""

CWE_ROWS = r"""
284|Improper Access Control||Pillar|Incomplete|
435|Improper Interaction Between Multiple Correctly-Behaving Entities||Pillar|Incomplete|
664|Improper Control of a Resource Through its Lifetime||Pillar|Incomplete|
682|Incorrect Calculation||Pillar|Draft|
691|Insufficient Control Flow Management||Pillar|Draft|
693|Protection Mechanism Failure||Pillar|Draft|
697|Incorrect Comparison||Pillar|Incomplete|
703|Improper Check or Handling of Exceptional Conditions||Pillar|Incomplete|
707|Improper Neutralization||Pillar|Incomplete|
710|Improper Adherence to Coding Standards||Pillar|Incomplete|
20|Improper Input Validation|707|Class|Stable|
74|Improper Neutralization of Special Elements in Output Used by a Downstream Component ('Injection')|707|Class|Incomplete|
116|Improper Encoding or Escaping of Output|707|Class|Draft|
138|Improper Neutralization of Special Elements|707|Class|Draft|
463|Deletion of Data Structure Sentinel|707|Base|Incomplete|
464|Addition of Data Structure Sentinel|138|Base|Incomplete|
140|Improper Neutralization of Delimiters|138|Base|Draft|
150|Improper Neutralization of Escape, Meta, or Control Sequences|138|Variant|Incomplete|
170|Improper Null Termination|707|Base|Incomplete|
117|Improper Output Neutralization for Logs|116|Base|Draft|Log forging
838|Inappropriate Encoding for Output Context|116|Base|Incomplete|
1284|Improper Validation of Specified Quantity in Input|20|Base|Incomplete|
1285|Improper Validation of Specified Index, Position, or Offset in Input|20|Base|Incomplete|
1286|Improper Validation of Syntactic Correctness of Input|20|Base|Incomplete|
1287|Improper Validation of Specified Type of Input|20|Base|Incomplete|
1288|Improper Validation of Consistency within Input|20|Base|Incomplete|
1289|Improper Validation of Unsafe Equivalence in Input|20|Base|Incomplete|
129|Improper Validation of Array Index|1285|Variant|Draft|out-of-bounds array index;index-out-of-range;array index underflow
606|Unchecked Input for Loop Condition|1284|Base|Draft|
179|Incorrect Behavior Order: Early Validation|20|Base|Incomplete|
622|Improper Validation of Function Hook Arguments|20|Variant|Draft|
1173|Improper Use of Validation Framework|20|Base|Incomplete|
112|Missing XML Validation|1286|Base|Draft|
781|Improper Address Validation in IOCTL with METHOD_NEITHER I/O Control Code|1285|Variant|Draft|
75|Failure to Sanitize Special Elements into a Different Plane (Special Element Injection)|74|Class|Draft|
77|Improper Neutralization of Special Elements used in a Command ('Command Injection')|74|Class|Draft|
78|Improper Neutralization of Special Elements used in an OS Command ('OS Command Injection')|77|Base|Stable|Shell injection;Shell metacharacters;OS Command Injection
88|Improper Neutralization of Argument Delimiters in a Command ('Argument Injection')|77|Base|Draft|
624|Executable Regular Expression Error|77|Base|Incomplete|
917|Improper Neutralization of Special Elements used in an Expression Language Statement ('Expression Language Injection')|77|Base|Incomplete|EL Injection
79|Improper Neutralization of Input During Web Page Generation ('Cross-site Scripting')|74|Base|Stable|XSS;HTML Injection;CSS
80|Improper Neutralization of Script-Related HTML Tags in a Web Page (Basic XSS)|79|Variant|Incomplete|
81|Improper Neutralization of Script in an Error Message Web Page|79|Variant|Incomplete|
83|Improper Neutralization of Script in Attributes in a Web Page|79|Variant|Draft|
84|Improper Neutralization of Encoded URI Schemes in a Web Page|79|Variant|Draft|
85|Doubled Character XSS Manipulations|79|Variant|Draft|
86|Improper Neutralization of Invalid Characters in Identifiers in Web Pages|79 436|Variant|Draft|
87|Improper Neutralization of Alternate XSS Syntax|79|Variant|Draft|
82|Improper Neutralization of Script in Attributes of IMG Tags in a Web Page|83|Variant|Draft|
91|XML Injection (aka Blind XPath Injection)|74|Base|Draft|
93|Improper Neutralization of CRLF Sequences ('CRLF Injection')|74|Base|Draft|
113|Improper Neutralization of CRLF Sequences in HTTP Headers ('HTTP Response Splitting')|93 436|Variant|Incomplete|HTTP Response Splitting
94|Improper Control of Generation of Code ('Code Injection')|74 913|Base|Draft|
95|Improper Neutralization of Directives in Dynamically Evaluated Code ('Eval Injection')|94|Variant|Incomplete|
96|Improper Neutralization of Directives in Statically Saved Code ('Static Code Injection')|94|Base|Draft|
97|Improper Neutralization of Server-Side Includes (SSI) Within a Web Page|96|Variant|Draft|
1336|Improper Neutralization of Special Elements Used in a Template Engine|94|Base|Incomplete|Server-Side Template Injection;SSTI
99|Improper Control of Resource Identifiers ('Resource Injection')|74|Base|Draft|Insecure Direct Object Reference
943|Improper Neutralization of Special Elements in Data Query Logic|74|Class|Incomplete|
89|Improper Neutralization of Special Elements used in an SQL Command ('SQL Injection')|943|Base|Stable|SQLi
90|Improper Neutralization of Special Elements used in an LDAP Query ('LDAP Injection')|943|Base|Draft|
643|Improper Neutralization of Data within XPath Expressions ('XPath Injection')|943|Base|Incomplete|
652|Improper Neutralization of Data within XQuery Expressions ('XQuery Injection')|943|Base|Incomplete|
564|SQL Injection: Hibernate|89|Variant|Incomplete|
1236|Improper Neutralization of Formula Elements in a CSV File|74|Base|Incomplete|CSV Injection;Formula Injection
118|Incorrect Access of Indexable Resource ('Range Error')|664|Class|Incomplete|
119|Improper Restriction of Operations within the Bounds of a Memory Buffer|118|Class|Stable|Buffer Overflow;buffer overrun;memory safety
120|Buffer Copy without Checking Size of Input ('Classic Buffer Overflow')|119|Base|Incomplete|classic buffer overflow
125|Out-of-bounds Read|119|Base|Draft|OOB read
126|Buffer Over-read|125 788|Variant|Draft|
127|Buffer Under-read|125 786|Variant|Draft|
466|Return of Pointer Value Outside of Expected Range|119|Base|Draft|
786|Access of Memory Location Before Start of Buffer|119|Base|Incomplete|
787|Out-of-bounds Write|119|Base|Draft|Memory Corruption
788|Access of Memory Location After End of Buffer|119|Base|Incomplete|
805|Buffer Access with Incorrect Length Value|119|Base|Incomplete|
806|Buffer Access Using Size of Source Buffer|805|Variant|Incomplete|
822|Untrusted Pointer Dereference|119|Base|Incomplete|
823|Use of Out-of-range Pointer Offset|119|Base|Incomplete|
824|Access of Uninitialized Pointer|119|Base|Incomplete|wild pointer
825|Expired Pointer Dereference|119 672|Base|Incomplete|
121|Stack-based Buffer Overflow|787 788|Variant|Draft|Stack Overflow;stack buffer overflow;stack-based buffer overflow
122|Heap-based Buffer Overflow|787 788|Variant|Draft|heap overflow;heap buffer overflow;heap-based buffer overflow
124|Buffer Underwrite ('Buffer Underflow')|786 787|Base|Incomplete|buffer underrun
123|Write-what-where Condition|787|Base|Draft|
785|Use of Path Manipulation Function without Maximum-sized Buffer|120|Variant|Incomplete|
416|Use After Free|825|Variant|Stable|Dangling pointer;UAF;Use-After-Free
415|Double Free|825 666|Variant|Draft|Double-free
400|Uncontrolled Resource Consumption|664|Class|Draft|Resource Exhaustion
770|Allocation of Resources Without Limits or Throttling|400|Base|Incomplete|
789|Memory Allocation with Excessive Size Value|770|Variant|Draft|Stack Exhaustion
774|Allocation of File Descriptors or Handles Without Limits or Throttling|770|Variant|Incomplete|
920|Improper Restriction of Power Consumption|400|Base|Incomplete|
405|Asymmetric Resource Consumption (Amplification)|400|Class|Incomplete|
406|Insufficient Control of Network Message Volume (Network Amplification)|405|Class|Incomplete|
407|Inefficient Algorithmic Complexity|405|Class|Incomplete|Quadratic Complexity
1333|Inefficient Regular Expression Complexity|407|Base|Draft|ReDoS
409|Improper Handling of Highly Compressed Data (Data Amplification)|405|Base|Incomplete|zip bomb;decompression bomb
776|Improper Restriction of Recursive Entity References in DTDs ('XML Entity Expansion')|674 405|Base|Draft|XEE;Billion Laughs Attack;XML Bomb
779|Logging of Excessive Data|400|Base|Draft|
1235|Incorrect Use of Autoboxing and Unboxing for Performance Critical Operations|400|Base|Incomplete|
404|Improper Resource Shutdown or Release|664|Class|Draft|
772|Missing Release of Resource after Effective Lifetime|404|Base|Draft|
401|Missing Release of Memory after Effective Lifetime|772|Variant|Draft|Memory Leak
775|Missing Release of File Descriptor or Handle after Effective Lifetime|772|Variant|Draft|
763|Release of Invalid Pointer or Reference|404|Base|Incomplete|
761|Free of Pointer not at Start of Buffer|763|Variant|Incomplete|
762|Mismatched Memory Management Routines|763|Variant|Incomplete|
459|Incomplete Cleanup|404|Base|Draft|Insufficient Cleanup
665|Improper Initialization|664|Class|Draft|
908|Use of Uninitialized Resource|665|Base|Incomplete|
909|Missing Initialization of Resource|665|Class|Incomplete|
457|Use of Uninitialized Variable|908|Variant|Draft|
456|Missing Initialization of a Variable|909|Variant|Draft|
1188|Insecure Default Initialization of Resource|665|Base|Incomplete|
453|Insecure Default Variable Initialization|1188|Variant|Draft|
666|Operation on Resource in Wrong Phase of Lifetime|664|Class|Draft|
672|Operation on a Resource after Expiration or Release|666|Class|Draft|
613|Insufficient Session Expiration|672|Base|Incomplete|
910|Use of Expired File Descriptor|672|Base|Incomplete|Stale file descriptor
668|Exposure of Resource to Wrong Sphere|664|Class|Draft|
200|Exposure of Sensitive Information to an Unauthorized Actor|668|Class|Draft|Information Disclosure;Information Leak
201|Insertion of Sensitive Information Into Sent Data|200|Base|Draft|
203|Observable Discrepancy|200|Base|Incomplete|side channel attack
204|Observable Response Discrepancy|203|Base|Incomplete|
208|Observable Timing Discrepancy|203|Base|Incomplete|timing attack
209|Generation of Error Message Containing Sensitive Information|200|Base|Draft|
213|Exposure of Sensitive Information Due to Incompatible Policies|200|Base|Draft|
215|Insertion of Sensitive Information Into Debugging Code|200|Base|Draft|
359|Exposure of Private Personal Information to an Unauthorized Actor|200|Base|Incomplete|Privacy violation;Privacy leak
497|Exposure of Sensitive System Information to an Unauthorized Control Sphere|200|Base|Incomplete|
538|Insertion of Sensitive Information into Externally-Accessible File or Directory|200|Base|Draft|
532|Insertion of Sensitive Information into Log File|538|Base|Incomplete|
548|Exposure of Information Through Directory Listing|497|Variant|Draft|
134|Use of Externally-Controlled Format String|668|Base|Draft|format string
552|Files or Directories Accessible to External Parties|668 285|Base|Draft|
377|Insecure Temporary File|668|Class|Incomplete|
379|Creation of Temporary File in Directory with Incorrect Permissions|377|Base|Incomplete|
219|Storage of File with Sensitive Data Under Web Root|552|Variant|Draft|
427|Uncontrolled Search Path Element|668|Base|Draft|DLL preloading;Binary planting;Insecure library loading;Dependency confusion
428|Unquoted Search Path or Element|668|Base|Draft|
642|External Control of Critical State Data|668|Class|Draft|
472|External Control of Assumed-Immutable Web Parameter|642|Base|Draft|Assumed-Immutable Parameter Tampering
673|External Influence of Sphere Definition|664|Class|Draft|
426|Untrusted Search Path|673 642|Base|Stable|Untrusted Path
669|Incorrect Resource Transfer Between Spheres|664|Class|Draft|
434|Unrestricted Upload of File with Dangerous Type|669|Base|Draft|Unrestricted File Upload
829|Inclusion of Functionality from Untrusted Control Sphere|669|Class|Incomplete|
98|Improper Control of Filename for Include/Require Statement in PHP Program ('PHP Remote File Inclusion')|706 829|Variant|Draft|Remote file include;RFI;Local file inclusion
494|Download of Code Without Integrity Check|669 345|Base|Draft|
212|Improper Removal of Sensitive Information Before Storage or Transfer|669|Base|Incomplete|
565|Reliance on Cookies without Validation and Integrity Checking|642 669|Base|Incomplete|
610|Externally Controlled Reference to a Resource in Another Sphere|664|Class|Draft|
601|URL Redirection to Untrusted Site ('Open Redirect')|610|Base|Draft|Open Redirect;Cross-site Redirect;Cross-domain Redirect
611|Improper Restriction of XML External Entity Reference|610|Base|Draft|XXE
441|Unintended Proxy or Intermediary ('Confused Deputy')|610|Class|Draft|Confused Deputy
918|Server-Side Request Forgery (SSRF)|441|Base|Incomplete|XSPA;SSRF
73|External Control of File Name or Path|610 642|Base|Draft|
15|External Control of System or Configuration Setting|642 610|Base|Incomplete|
384|Session Fixation|610|Compound|Incomplete|
470|Use of Externally-Controlled Input to Select Classes or Code ('Unsafe Reflection')|913 610|Base|Draft|Reflection Injection
706|Use of Incorrectly-Resolved Name or Reference|664|Class|Incomplete|
22|Improper Limitation of a Pathname to a Restricted Directory ('Path Traversal')|706 668|Base|Stable|Directory traversal;Path traversal
23|Relative Path Traversal|22|Base|Draft|
24|Path Traversal: '../filedir'|23|Variant|Incomplete|
36|Absolute Path Traversal|22|Base|Draft|
59|Improper Link Resolution Before File Access ('Link Following')|706|Base|Draft|insecure temporary file;Zip Slip
61|UNIX Symbolic Link (Symlink) Following|59|Compound|Incomplete|Symlink following;symlink vulnerability
62|UNIX Hard Link|59|Variant|Incomplete|
64|Windows Shortcut Following (.LNK)|59|Variant|Incomplete|Windows symbolic link following
65|Windows Hard Link|59|Variant|Incomplete|
41|Improper Resolution of Path Equivalence|706|Base|Incomplete|
178|Improper Handling of Case Sensitivity|706|Base|Incomplete|
386|Symbolic Name not Mapping to Correct Object|706|Base|Draft|
704|Incorrect Type Conversion or Cast|664|Class|Incomplete|
681|Incorrect Conversion between Numeric Types|704|Base|Draft|
194|Unexpected Sign Extension|681|Variant|Incomplete|
195|Signed to Unsigned Conversion Error|681|Variant|Draft|
196|Unsigned to Signed Conversion Error|681|Variant|Draft|
197|Numeric Truncation Error|681|Base|Incomplete|
843|Access of Resource Using Incompatible Type ('Type Confusion')|704|Base|Incomplete|Object Type Confusion
913|Improper Control of Dynamically-Managed Code Resources|664|Class|Incomplete|
502|Deserialization of Untrusted Data|913|Base|Draft|Marshaling, Unmarshaling;Pickling, Unpickling;PHP Object Injection
915|Improperly Controlled Modification of Dynamically-Determined Object Attributes|913|Base|Incomplete|Mass Assignment;AutoBinding;Object injection
1321|Improperly Controlled Modification of Object Prototype Attributes ('Prototype Pollution')|915|Variant|Incomplete|Prototype pollution
662|Improper Synchronization|664|Class|Draft|
667|Improper Locking|662|Class|Draft|
820|Missing Synchronization|662|Base|Incomplete|
821|Incorrect Synchronization|662|Base|Incomplete|
412|Unrestricted Externally Accessible Lock|667|Base|Incomplete|
764|Multiple Locks of a Critical Resource|667|Base|Draft|
1229|Creation of Emergent Resource|664|Class|Incomplete|
221|Information Loss or Omission|664|Class|Incomplete|
223|Omission of Security-relevant Information|221|Base|Draft|
778|Insufficient Logging|223|Base|Draft|
922|Insecure Storage of Sensitive Information|664|Class|Incomplete|
312|Cleartext Storage of Sensitive Information|922 311|Base|Draft|
315|Cleartext Storage of Sensitive Information in a Cookie|312|Variant|Draft|
1250|Improper Preservation of Consistency Between Independent Representations of Shared State|664|Base|Incomplete|
190|Integer Overflow or Wraparound|682|Base|Stable|Overflow;Wraparound;wrap, wrap-around, wrap around
191|Integer Underflow (Wrap or Wraparound)|682|Base|Draft|Integer underflow
680|Integer Overflow to Buffer Overflow|190|Compound|Draft|
128|Wrap-around Error|682|Base|Incomplete|
131|Incorrect Calculation of Buffer Size|682|Base|Draft|
467|Use of sizeof() on a Pointer Type|131|Variant|Draft|
193|Off-by-one Error|682|Base|Draft|off-by-five;starvation;fencepost error
369|Divide By Zero|682|Base|Draft|
1335|Incorrect Bitwise Shift of Integer|682|Base|Draft|
1339|Insufficient Precision or Accuracy of a Real Number|682|Base|Draft|
362|Concurrent Execution using Shared Resource with Improper Synchronization ('Race Condition')|691|Class|Draft|Race Condition
364|Signal Handler Race Condition|362|Base|Incomplete|
366|Race Condition within a Thread|362|Base|Draft|
367|Time-of-check Time-of-use (TOCTOU) Race Condition|362|Base|Incomplete|TOCTTOU;TOCCTOU
421|Race Condition During Access to Alternate Channel|362|Base|Draft|
670|Always-Incorrect Control Flow Implementation|691|Class|Draft|
617|Reachable Assertion|670|Base|Draft|assertion failure
480|Use of Incorrect Operator|670|Base|Draft|
483|Incorrect Block Delimitation|670|Base|Draft|
834|Excessive Iteration|691|Class|Incomplete|
835|Loop with Unreachable Exit Condition ('Infinite Loop')|834|Base|Incomplete|
674|Uncontrolled Recursion|834|Class|Draft|Stack Exhaustion Recursion
696|Incorrect Behavior Order|691|Class|Incomplete|
705|Incorrect Control Flow Scoping|691|Class|Draft|
698|Execution After Redirect (EAR)|705|Base|Incomplete|Redirect Without Exit
430|Deployment of Wrong Handler|691|Base|Incomplete|
431|Missing Handler|691|Base|Draft|
799|Improper Control of Interaction Frequency|691|Class|Incomplete|Insufficient anti-automation;Brute force
307|Improper Restriction of Excessive Authentication Attempts|799 287|Base|Draft|
837|Improper Enforcement of a Single, Unique Action|799|Base|Incomplete|
841|Improper Enforcement of Behavioral Workflow|691|Base|Incomplete|
1265|Unintended Reentrant Invocation of Non-reentrant Code Via Nested Calls|691|Base|Incomplete|
345|Insufficient Verification of Data Authenticity|693|Class|Draft|
346|Origin Validation Error|345 284|Class|Draft|
347|Improper Verification of Cryptographic Signature|345|Base|Draft|
352|Cross-Site Request Forgery (CSRF)|345|Compound|Stable|Session Riding;Cross Site Reference Forgery;XSRF;CSRF
354|Improper Validation of Integrity Check Value|345 754|Base|Draft|
924|Improper Enforcement of Message Integrity During Transmission in a Communication Channel|345|Base|Incomplete|
1385|Missing Origin Validation in WebSockets|346|Variant|Incomplete|Cross-Site WebSocket hijacking;CSWSH
311|Missing Encryption of Sensitive Data|693|Class|Draft|
319|Cleartext Transmission of Sensitive Information|311|Base|Draft|
326|Inadequate Encryption Strength|693|Class|Draft|
327|Use of a Broken or Risky Cryptographic Algorithm|693|Class|Draft|
328|Use of Weak Hash|326|Base|Draft|
916|Use of Password Hash With Insufficient Computational Effort|328|Base|Incomplete|
330|Use of Insufficiently Random Values|693|Class|Stable|
331|Insufficient Entropy|330|Base|Draft|
335|Incorrect Usage of Seeds in Pseudo-Random Number Generator (PRNG)|330|Base|Draft|
338|Use of Cryptographically Weak Pseudo-Random Number Generator (PRNG)|330|Base|Draft|
344|Use of Invariant Value in Dynamically Changing Context|330|Base|Draft|
184|Incomplete List of Disallowed Inputs|693 1023|Base|Draft|Denylist / Deny List;Blacklist / Black List
357|Insufficient UI Warning of Dangerous Operations|693|Base|Draft|
358|Improperly Implemented Security Check for Standard|693|Base|Draft|
424|Improper Protection of Alternate Path|693|Class|Draft|
654|Reliance on a Single Factor in a Security Decision|693|Base|Draft|
655|Insufficient Psychological Acceptability|693|Base|Draft|
656|Reliance on Security Through Obscurity|693|Base|Draft|Never Assuming your secrets are safe
757|Selection of Less-Secure Algorithm During Negotiation ('Algorithm Downgrade')|693|Base|Draft|
807|Reliance on Untrusted Inputs in a Security Decision|693|Base|Incomplete|
1039|Automated Recognition Mechanism with Inadequate Detection or Handling of Adversarial Input Perturbations|693|Class|Incomplete|
671|Lack of Administrator Control over Security|693|Class|Draft|
798|Use of Hard-coded Credentials|671 344|Base|Draft|
259|Use of Hard-coded Password|798|Variant|Draft|
321|Use of Hard-coded Cryptographic Key|798|Variant|Draft|
308|Use of Single-factor Authentication|654|Base|Draft|
309|Use of Password System for Primary Authentication|654|Base|Draft|
285|Improper Authorization|284|Class|Draft|AuthZ
862|Missing Authorization|285|Class|Incomplete|AuthZ bypass
863|Incorrect Authorization|285|Class|Incomplete|
639|Authorization Bypass Through User-Controlled Key|863|Base|Incomplete|Insecure Direct Object Reference / IDOR;Broken Object Level Authorization / BOLA;Horizontal Authorization
425|Direct Request ('Forced Browsing')|862|Base|Incomplete|forced browsing
566|Authorization Bypass Through User-Controlled SQL Primary Key|639|Variant|Incomplete|
732|Incorrect Permission Assignment for Critical Resource|285 668|Class|Draft|
276|Incorrect Default Permissions|732|Base|Draft|
281|Improper Preservation of Permissions|732|Base|Draft|
287|Improper Authentication|284|Class|Draft|authentification;AuthN;AuthC
288|Authentication Bypass Using an Alternate Path or Channel|287|Base|Incomplete|
290|Authentication Bypass by Spoofing|287|Base|Incomplete|
294|Authentication Bypass by Capture-replay|287|Base|Incomplete|
295|Improper Certificate Validation|287|Base|Draft|
297|Improper Validation of Certificate with Host Mismatch|295|Variant|Incomplete|
303|Incorrect Implementation of Authentication Algorithm|287|Base|Draft|
304|Missing Critical Step in Authentication|303|Base|Draft|
305|Authentication Bypass by Primary Weakness|287|Base|Draft|
306|Missing Authentication for Critical Function|287|Base|Draft|No Authentication for Critical Function
522|Insufficiently Protected Credentials|287|Class|Incomplete|
521|Weak Password Requirements|287|Base|Draft|
620|Unverified Password Change|287|Base|Draft|
640|Weak Password Recovery Mechanism for Forgotten Password|287|Base|Incomplete|
269|Improper Privilege Management|284|Class|Draft|
250|Execution with Unnecessary Privileges|269 657|Base|Draft|
266|Incorrect Privilege Assignment|269|Base|Draft|
267|Privilege Defined With Unsafe Actions|269|Base|Incomplete|
268|Privilege Chaining|269|Base|Draft|
270|Privilege Context Switching Error|269|Base|Draft|
271|Privilege Dropping / Lowering Errors|269|Class|Incomplete|
272|Least Privilege Violation|271|Base|Incomplete|
273|Improper Check for Dropped Privileges|271 754|Base|Incomplete|
274|Improper Handling of Insufficient Privileges|269 755|Base|Draft|
648|Incorrect Use of Privileged APIs|269|Base|Incomplete|
282|Improper Ownership Management|284|Class|Draft|
283|Unverified Ownership|282|Base|Draft|
708|Incorrect Ownership Assignment|282|Base|Incomplete|
749|Exposed Dangerous Method or Function|284|Base|Incomplete|
618|Exposed Unsafe ActiveX Method|749|Variant|Draft|
782|Exposed IOCTL with Insufficient Access Control|749|Variant|Draft|
923|Improper Restriction of Communication Channel to Intended Endpoints|284|Class|Incomplete|
940|Improper Verification of Source of a Communication Channel|923|Base|Incomplete|
941|Incorrectly Specified Destination in a Communication Channel|923|Base|Incomplete|
1191|On-Chip Debug and Test Interface With Improper Access Control|284|Base|Stable|
1220|Insufficient Granularity of Access Control|284|Base|Incomplete|
754|Improper Check for Unusual or Exceptional Conditions|703|Class|Incomplete|
252|Unchecked Return Value|754|Base|Draft|
253|Incorrect Check of Function Return Value|754|Base|Incomplete|
476|NULL Pointer Dereference|754 710|Base|Stable|NPD;null deref;NPE;nil pointer dereference
755|Improper Handling of Exceptional Conditions|703|Class|Incomplete|
248|Uncaught Exception|705 755|Base|Draft|
390|Detection of Error Condition Without Action|755|Base|Draft|
392|Missing Report of Error Condition|755|Base|Draft|
460|Improper Cleanup on Thrown Exception|755|Base|Draft|
636|Not Failing Securely ('Failing Open')|755|Class|Draft|Failing Open
391|Unchecked Error Condition|754|Base|Incomplete|
394|Unexpected Status Code or Return Value|754|Base|Draft|
1023|Incomplete Comparison with Missing Factors|697|Class|Incomplete|
1024|Comparison of Incompatible Types|697|Base|Incomplete|
1025|Comparison Using Wrong Factors|697|Base|Incomplete|
1077|Floating Point Comparison with Incorrect Operator|697|Variant|Incomplete|
185|Incorrect Regular Expression|697|Class|Draft|
186|Overly Restrictive Regular Expression|185|Base|Draft|
625|Permissive Regular Expression|185|Base|Draft|
187|Partial String Comparison|1023|Variant|Incomplete|
1254|Incorrect Comparison Logic Granularity|697|Base|Stable|
436|Interpretation Conflict|435|Class|Incomplete|
444|Inconsistent Interpretation of HTTP Requests ('HTTP Request Smuggling')|436|Base|Incomplete|HTTP Request Smuggling
115|Misinterpretation of Input|436|Base|Incomplete|
437|Incomplete Model of Endpoint Features|436|Base|Incomplete|
439|Behavioral Change in New Version or Environment|435|Base|Draft|Functional change
188|Reliance on Data/Memory Layout|435|Base|Draft|
1038|Insecure Automated Optimizations|435|Class|Incomplete|
684|Incorrect Provision of Specified Functionality|710|Class|Draft|
451|User Interface (UI) Misrepresentation of Critical Information|684 221|Class|Draft|
1021|Improper Restriction of Rendered UI Layers or Frames|451|Base|Incomplete|Clickjacking;UI Redress Attack;Tapjacking
440|Expected Behavior Violation|684|Base|Draft|
446|UI Discrepancy for Security Feature|684|Base|Incomplete|
758|Reliance on Undefined, Unspecified, or Implementation-Defined Behavior|710|Class|Incomplete|
477|Use of Obsolete Function|710|Base|Draft|
1164|Irrelevant Code|710|Class|Incomplete|
561|Dead Code|1164|Base|Draft|
563|Assignment to Variable without Use|1164|Base|Draft|Unused Variable
1177|Use of Prohibited Code|710|Class|Incomplete|
676|Use of Potentially Dangerous Function|1177|Base|Draft|
242|Use of Inherently Dangerous Function|1177|Base|Draft|
1357|Reliance on Insufficiently Trustworthy Component|710|Class|Incomplete|
1104|Use of Unmaintained Third Party Components|1357|Base|Incomplete|
657|Violation of Secure Design Principles|710|Class|Draft|
1059|Insufficient Technical Documentation|710|Class|Incomplete|
1076|Insufficient Adherence to Expected Conventions|710|Class|Incomplete|
1078|Inappropriate Source Code Style or Formatting|1076|Class|Incomplete|
1041|Use of Redundant Code|710|Base|Incomplete|
1061|Insufficient Encapsulation|710|Class|Incomplete|
1120|Excessive Code Complexity|710|Class|Incomplete|
1093|Excessively Complex Data Representation|710|Class|Incomplete|
1068|Inconsistency Between Implementation and Documented Design|710|Base|Incomplete|
71|DEPRECATED: Apple '.DS_Store'||Variant|Deprecated|
92|DEPRECATED: Improper Sanitization of Custom Special Characters||Base|Deprecated|
132|DEPRECATED: Miscalculated Null Termination||Base|Deprecated|
217|DEPRECATED: Failure to Protect Stored Data from Modification||Base|Deprecated|
218|DEPRECATED: Failure to provide confidentiality for stored data||Base|Deprecated|
225|DEPRECATED: General Information Management Problems||Base|Deprecated|
249|DEPRECATED: Often Misused: Path Manipulation||Variant|Deprecated|
423|DEPRECATED: Proxied Trusted Channel||Base|Deprecated|
443|DEPRECATED: HTTP response splitting||Base|Deprecated|
458|DEPRECATED: Incorrect Initialization||Base|Deprecated|
516|DEPRECATED: Covert Timing Channel||Base|Deprecated|
596|DEPRECATED: Incorrect Semantic Object Comparison||Base|Deprecated|
"""

# Categories that NVD uses for legacy assignments. They live in the
# <Categories> section of the catalog and are not weaknesses, so CVEs mapped to
# them count as "not mapped to a valid weakness".
CATEGORY_ROWS = [
    (16, "Configuration"),
    (17, "DEPRECATED: Code"),
    (19, "Data Processing Errors"),
    (189, "Numeric Errors"),
    (254, "7PK - Security Features"),
    (255, "Credentials Management Errors"),
    (264, "Permissions, Privileges, and Access Controls"),
    (275, "Permission Issues"),
    (310, "Cryptographic Issues"),
    (399, "Resource Management Errors"),
]


def parse_rows():
    rows = []
    for line in CWE_ROWS.strip().splitlines():
        parts = line.split("|")
        assert len(parts) == 6, line
        cid, name, parents, abstraction, status, alts = parts
        rows.append({
            "id": int(cid),
            "name": name,
            "parents": [int(p) for p in parents.split()] if parents.strip() else [],
            "abstraction": abstraction,
            "status": status,
            "alt_terms": [a.strip() for a in alts.split(";") if a.strip()] if alts else [],
        })
    return rows
