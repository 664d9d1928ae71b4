#!/usr/bin/env python3
"""Generates the default content packs under content/.

Output is deterministic for a given --seed so the checked-in packs can be
regenerated and diffed.
"""

import argparse
import json
import random
from pathlib import Path

# ---------------------------------------------------------------- questions

ACRONYMS = [
    ("MFA", "Multi-Factor Authentication", "authentication"),
    ("VPN", "Virtual Private Network", "networking"),
    ("TLS", "Transport Layer Security", "cryptography"),
    ("DNS", "Domain Name System", "networking"),
    ("XSS", "Cross-Site Scripting", "web-security"),
    ("CSRF", "Cross-Site Request Forgery", "web-security"),
    ("IDS", "Intrusion Detection System", "defense"),
    ("IPS", "Intrusion Prevention System", "defense"),
    ("SIEM", "Security Information and Event Management", "defense"),
    ("PKI", "Public Key Infrastructure", "cryptography"),
    ("AES", "Advanced Encryption Standard", "cryptography"),
    ("RSA", "Rivest-Shamir-Adleman", "cryptography"),
    ("HMAC", "Hash-based Message Authentication Code", "cryptography"),
    ("DDoS", "Distributed Denial of Service", "attacks"),
    ("APT", "Advanced Persistent Threat", "attacks"),
    ("CVE", "Common Vulnerabilities and Exposures", "defense"),
    ("OTP", "One-Time Password", "authentication"),
    ("SSO", "Single Sign-On", "authentication"),
    ("NAT", "Network Address Translation", "networking"),
    ("DMZ", "Demilitarized Zone", "networking"),
    ("WAF", "Web Application Firewall", "web-security"),
    ("EDR", "Endpoint Detection and Response", "defense"),
    ("RBAC", "Role-Based Access Control", "authentication"),
    ("MITM", "Man-in-the-Middle", "attacks"),
    ("CSP", "Content Security Policy", "web-security"),
    ("SOC", "Security Operations Center", "defense"),
    ("BYOD", "Bring Your Own Device", "policy"),
    ("DLP", "Data Loss Prevention", "policy"),
    ("GDPR", "General Data Protection Regulation", "policy"),
    ("PII", "Personally Identifiable Information", "policy"),
    ("RAT", "Remote Access Trojan", "malware"),
    ("SSID", "Service Set Identifier", "networking"),
    ("WPA", "Wi-Fi Protected Access", "networking"),
    ("SMTP", "Simple Mail Transfer Protocol", "networking"),
    ("SPF", "Sender Policy Framework", "phishing"),
    ("DKIM", "DomainKeys Identified Mail", "phishing"),
    ("DMARC", "Domain-based Message Authentication, Reporting and Conformance", "phishing"),
    ("BEC", "Business Email Compromise", "phishing"),
    ("OSINT", "Open-Source Intelligence", "attacks"),
    ("ACL", "Access Control List", "networking"),
]

PORTS = [
    ("SSH", 22), ("Telnet", 23), ("SMTP", 25), ("DNS", 53), ("HTTP", 80),
    ("POP3", 110), ("IMAP", 143), ("HTTPS", 443), ("RDP", 3389), ("FTP control", 21),
    ("LDAP", 389), ("MySQL", 3306), ("PostgreSQL", 5432), ("SNMP", 161),
    ("SMB", 445), ("NTP", 123), ("IMAPS", 993), ("LDAPS", 636),
]

DEFINITIONS = [
    ("Phishing", "Tricking people into revealing information through fraudulent messages", "phishing"),
    ("Spear phishing", "A fraudulent message tailored to one specific person or small group", "phishing"),
    ("Whaling", "A targeted fraudulent message aimed at senior executives", "phishing"),
    ("Vishing", "Fraud carried out over voice phone calls", "phishing"),
    ("Smishing", "Fraud carried out over SMS text messages", "phishing"),
    ("Ransomware", "Software that encrypts files and demands payment for the key", "malware"),
    ("Worm", "Malicious code that spreads across networks without user action", "malware"),
    ("Trojan", "Malicious code disguised as legitimate software", "malware"),
    ("Rootkit", "Malware that hides its presence deep in the operating system", "malware"),
    ("Keylogger", "Software that secretly records keystrokes", "malware"),
    ("Botnet", "A network of compromised machines controlled by one operator", "malware"),
    ("Zero-day", "A vulnerability unknown to the vendor with no patch available", "attacks"),
    ("Brute force", "Trying every possible password until one works", "authentication"),
    ("Credential stuffing", "Reusing leaked username and password pairs on other sites", "authentication"),
    ("Salting", "Adding random data to a password before hashing it", "cryptography"),
    ("Hashing", "A one-way transformation producing a fixed-size digest", "cryptography"),
    ("Tailgating", "Following an authorized person through a secure door", "social-engineering"),
    ("Pretexting", "Inventing a believable scenario to extract information", "social-engineering"),
    ("Baiting", "Leaving an infected device for a victim to find and use", "social-engineering"),
    ("Shoulder surfing", "Watching someone enter a password or PIN", "social-engineering"),
    ("Least privilege", "Granting users only the access they need for their job", "policy"),
    ("Defense in depth", "Layering several independent security controls", "defense"),
    ("Sandboxing", "Running untrusted code in an isolated environment", "defense"),
    ("Patching", "Applying vendor updates that fix known vulnerabilities", "defense"),
    ("Honeypot", "A decoy system built to attract and study attackers", "defense"),
    ("Typosquatting", "Registering misspelled domains of popular sites", "phishing"),
    ("Clickjacking", "Tricking a user into clicking a hidden page element", "web-security"),
    ("SQL injection", "Inserting database commands through unsanitized input", "web-security"),
    ("Privilege escalation", "Gaining higher access rights than originally granted", "attacks"),
    ("Lateral movement", "Moving from one compromised machine to others in a network", "attacks"),
    ("Exfiltration", "Unauthorized transfer of data out of an organization", "attacks"),
    ("Cache poisoning", "Inserting false records into a resolver so names point elsewhere", "networking"),
    ("Port scanning", "Probing a host to discover which services are listening", "networking"),
    ("Digital signature", "Proof that a message came from the key holder and was not altered", "cryptography"),
    ("Certificate authority", "An entity that vouches for the identity behind a public key", "cryptography"),
    ("Incident response", "The organized process for handling a security breach", "incident-response"),
    ("Containment", "Limiting the spread of an incident before eradication", "incident-response"),
    ("Forensic image", "A bit-for-bit copy of a disk preserved as evidence", "incident-response"),
]

TRUE_FALSE = [
    ("HTTPS encrypts traffic between the browser and the web server.", True, "web-security", 1),
    ("A padlock icon guarantees that a website is trustworthy.", False, "web-security", 2),
    ("Reusing one strong password on many sites is safe.", False, "authentication", 1),
    ("A password manager can generate a unique password for every site.", True, "authentication", 1),
    ("Antivirus software makes software updates unnecessary.", False, "defense", 1),
    ("Public Wi-Fi networks can let others observe unencrypted traffic.", True, "networking", 1),
    ("Hashing is reversible if you know the algorithm.", False, "cryptography", 3),
    ("A firewall can block traffic based on port numbers.", True, "networking", 2),
    ("Legitimate IT staff will often ask for your password by email.", False, "phishing", 1),
    ("Attackers can spoof the display name of an email sender.", True, "phishing", 2),
    ("Two-factor authentication stops all account takeovers.", False, "authentication", 3),
    ("Backups should be stored somewhere ransomware cannot reach.", True, "incident-response", 3),
    ("Encrypting a laptop disk protects data if the laptop is stolen.", True, "cryptography", 2),
    ("Unknown USB drives found in a parking lot are safe to plug in.", False, "social-engineering", 1),
    ("Macros in documents from unknown senders should be enabled to view content.", False, "malware", 2),
    ("A VPN hides your traffic from the local network operator.", True, "networking", 3),
    ("Symmetric encryption uses the same key to encrypt and decrypt.", True, "cryptography", 3),
    ("Asymmetric encryption uses a public key and a private key.", True, "cryptography", 3),
    ("MD5 is recommended for storing passwords today.", False, "cryptography", 4),
    ("Parameterized queries help prevent SQL injection.", True, "web-security", 4),
    ("Input validation alone is sufficient to stop every injection attack.", False, "web-security", 5),
    ("Salting prevents identical passwords from producing identical hashes.", True, "cryptography", 5),
    ("Social engineering targets people rather than software.", True, "social-engineering", 2),
    ("A zero-day vulnerability already has a vendor patch available.", False, "attacks", 4),
    ("Logging failed logins can help detect brute-force attempts.", True, "defense", 4),
    ("DNSSEC adds signatures that let resolvers verify DNS answers.", True, "networking", 6),
    ("WEP is considered a secure Wi-Fi encryption standard.", False, "networking", 5),
    ("A reverse proxy can absorb some request floods before they reach servers.", True, "defense", 6),
    ("An insider threat can only come from a current employee.", False, "attacks", 6),
    ("Least privilege reduces the damage a compromised account can do.", True, "policy", 5),
    ("Rainbow tables are effective against salted hashes.", False, "cryptography", 7),
    ("Certificate pinning makes man-in-the-middle attacks harder.", True, "cryptography", 7),
    ("The same-origin policy prevents all cross-site scripting.", False, "web-security", 7),
    ("HttpOnly cookies cannot be read by page JavaScript.", True, "web-security", 7),
    ("A stateful firewall tracks the state of active connections.", True, "networking", 6),
    ("Deleting a file always removes its data from the disk.", False, "incident-response", 6),
    ("Chain of custody records who handled evidence and when.", True, "incident-response", 8),
    ("SPF lets a domain list which servers may send mail for it.", True, "phishing", 8),
    ("DKIM signatures prove the message body was encrypted.", False, "phishing", 8),
    ("ECB mode leaks patterns in the plaintext.", True, "cryptography", 9),
    ("Nonce reuse with AES-GCM is harmless.", False, "cryptography", 9),
    ("Argon2 is designed to be memory-hard.", True, "cryptography", 9),
    ("Perfect forward secrecy protects past sessions if the long-term key leaks.", True, "cryptography", 10),
    ("A timing side channel can leak secrets through response times.", True, "attacks", 10),
    ("TOCTOU bugs arise when a checked condition changes before use.", True, "attacks", 10),
    ("Return-oriented programming requires injecting new executable code.", False, "attacks", 10),
    ("Address space layout randomization makes memory addresses harder to predict.", True, "defense", 9),
    ("Stack canaries detect some buffer overflows before a function returns.", True, "defense", 9),
    ("A CSRF token must be predictable so the server can check it.", False, "web-security", 8),
    ("The principle of separation of duties splits critical tasks between people.", True, "policy", 8),
    ("A Bloom filter can produce false negatives when checking leaked passwords.", False, "authentication", 10),
    ("Constant-time comparison prevents leaking how many digest bytes matched.", True, "cryptography", 10),
    ("Padding oracle attacks exploit error differences during decryption.", True, "cryptography", 10),
    ("Server-side request forgery makes a server fetch attacker-chosen URLs.", True, "web-security", 10),
    ("Kerberoasting targets service tickets encrypted with weak service-account passwords.", True, "attacks", 9),
    ("Memory-safe languages eliminate every class of security bug.", False, "defense", 9),
    ("Subresource integrity lets a page verify a script fetched from a CDN.", True, "web-security", 8),
    ("A WORM storage tier allows backups to be silently overwritten.", False, "incident-response", 7),
]

CATEGORIES = {
    "symmetric ciphers": (["AES", "ChaCha20", "Twofish", "3DES", "Blowfish"],
                          ["RSA", "ECDSA", "SHA-256", "Diffie-Hellman", "MD5"], "cryptography"),
    "hash functions": (["SHA-256", "SHA-3", "BLAKE2", "MD5", "SHA-1"],
                       ["AES", "RSA", "ChaCha20", "ECDSA", "Twofish"], "cryptography"),
    "authentication factors someone has": (
        ["Hardware security key", "Smart card", "Authenticator app on a phone", "SIM-based one-time code"],
        ["Password", "PIN", "Fingerprint", "Security question", "Face scan"], "authentication"),
    "common signs of a phishing email": (
        ["Urgent threats of account closure", "Mismatched link destinations", "Requests for passwords",
         "Lookalike sender domains", "Unexpected attachments"],
        ["A greeting using your correct full name from a known colleague about an expected meeting",
         "A message you requested that links to the official domain",
         "A calendar invite from your own team lead"], "phishing"),
    "malware families": (["Worm", "Trojan", "Ransomware", "Rootkit", "Spyware"],
                         ["Firewall", "Honeypot", "Proxy", "Router", "Hypervisor"], "malware"),
    "controls that limit a request flood": (
        ["Rate limiting", "Traffic scrubbing service", "Content delivery network", "Upstream filtering"],
        ["Disk encryption", "Password rotation", "Code signing", "Screen locks"], "defense"),
    "signs of a compromised web server": (
        ["Unknown files in plugin folders", "Unexplained CPU spikes", "Modified configuration files",
         "Outbound connections to unknown hosts"],
        ["Valid TLS certificate", "Scheduled backup completed", "Normal request volume"], "incident-response"),
    "secure coding practices": (
        ["Parameterized queries", "Output encoding", "Least-privilege database accounts", "Input validation"],
        ["String-concatenated SQL", "Disabling TLS verification", "Storing plaintext passwords",
         "Trusting client-side checks"], "web-security"),
    "physical security controls": (
        ["Badge readers", "Security cameras", "Visitor logs", "Locked server racks"],
        ["Antivirus", "Spam filter", "Password policy", "TLS"], "policy"),
    "email authentication standards": (["SPF", "DKIM", "DMARC"],
                                       ["FTP", "SNMP", "ARP", "DHCP", "NTP"], "phishing"),
}

CAESAR_WORDS = ["HELLO", "SECURE", "CIPHER", "SHIELD", "TOKEN", "ALERT", "BREACH", "PATCH",
                "SERVER", "ACCESS", "ROUTER", "SIGNAL", "VECTOR", "VAULT", "KERNEL", "PROXY"]


def caesar(text, shift):
    return "".join(chr((ord(c) - 65 + shift) % 26 + 65) if c.isalpha() else c for c in text)


class QuestionBuilder:
    def __init__(self, rng):
        self.rng = rng
        self.items = []

    def add(self, rank, topic, kind, prompt, choices, correct, explanation, time_limit_ms=20000):
        order = list(range(len(choices)))
        if kind != "true-false":
            self.rng.shuffle(order)
        shuffled = [choices[i] for i in order]
        new_correct = sorted(order.index(i) for i in correct)
        self.items.append({
            "id": f"q{len(self.items) + 1:04d}",
            "rank": rank,
            "topic": topic,
            "kind": kind,
            "prompt": prompt,
            "choices": shuffled,
            "correct": new_correct,
            "explanation": explanation,
            "time_limit_ms": time_limit_ms,
        })

    def acronyms(self):
        for i, (short, long, topic) in enumerate(ACRONYMS):
            others = [a[1] for a in ACRONYMS if a[0] != short]
            distractors = self.rng.sample(others, 3)
            rank = 1 + i % 3
            self.add(rank, topic, "single-choice", f"What does {short} stand for?",
                     [long] + distractors, [0], f"{short} stands for {long}.")

    def ports(self):
        numbers = sorted({p for _, p in PORTS})
        for i, (service, port) in enumerate(PORTS):
            distractors = self.rng.sample([n for n in numbers if n != port], 3)
            rank = 3 + i % 2
            self.add(rank, "networking", "single-choice",
                     f"Which port does {service} use by default?",
                     [str(port)] + [str(d) for d in distractors], [0],
                     f"{service} listens on port {port} by default.")

    def definitions(self):
        for i, (term, meaning, topic) in enumerate(DEFINITIONS):
            others = [d for d in DEFINITIONS if d[0] != term]
            rank = 1 + i % 6
            distractors = self.rng.sample(others, 3)
            self.add(rank, topic, "single-choice", f"Which term describes: {meaning.lower()}?",
                     [term] + [d[0] for d in distractors], [0], f"{term}: {meaning}.")
            distractors = self.rng.sample(others, 3)
            self.add(min(10, rank + 4), topic, "single-choice", f"What is {term.lower()}?",
                     [meaning] + [d[1] for d in distractors], [0], f"{term}: {meaning}.")

    def true_false(self):
        for statement, truth, topic, rank in TRUE_FALSE:
            self.add(rank, topic, "true-false", statement, ["True", "False"], [0 if truth else 1],
                     f"The statement is {'true' if truth else 'false'}.")

    def multi(self):
        names = sorted(CATEGORIES)
        for i in range(60):
            name = names[i % len(names)]
            members, outsiders, topic = CATEGORIES[name]
            k_in = self.rng.randint(2, min(3, len(members)))
            k_out = self.rng.randint(2, min(3, len(outsiders)))
            chosen_in = self.rng.sample(members, k_in)
            chosen_out = self.rng.sample(outsiders, k_out)
            rank = 4 + i % 7
            self.add(rank, topic, "multi-correct", f"Select all of the following that are {name}.",
                     chosen_in + chosen_out, list(range(k_in)),
                     f"{', '.join(chosen_in)} are {name}; {', '.join(chosen_out)} are not.",
                     30000)

    def caesar_puzzles(self):
        for i in range(30):
            word = CAESAR_WORDS[i % len(CAESAR_WORDS)]
            shift = self.rng.randint(1, 25)
            encoded = caesar(word, shift)
            wrong_shifts = self.rng.sample([s for s in range(1, 26) if s != shift], 3)
            choices = [word] + [caesar(encoded, -s) for s in wrong_shifts]
            rank = 6 + i % 5
            self.add(rank, "cryptography", "single-choice",
                     f"Decrypt the shift cipher text {encoded} (each letter was shifted forward by {shift}).",
                     choices, [0], f"Shifting {encoded} back by {shift} gives {word}.", 40000)


def build_questions(rng):
    b = QuestionBuilder(rng)
    b.acronyms()
    b.ports()
    b.definitions()
    b.true_false()
    b.multi()
    b.caesar_puzzles()
    return b.items


# ------------------------------------------------------------------- emails

COMPANY = "northwind.example"
FIRST_NAMES = ["Alex", "Sam", "Jordan", "Taylor", "Morgan", "Casey", "Riley", "Jamie", "Avery", "Quinn"]
LEGIT_SENDERS = [
    ("it-support@" + COMPANY, "IT Support"),
    ("hr@" + COMPANY, "Human Resources"),
    ("payroll@" + COMPANY, "Payroll"),
    ("facilities@" + COMPANY, "Facilities"),
    ("noreply@github.com", "GitHub"),
    ("calendar-notification@google.com", "Google Calendar"),
    ("no-reply@zoom.us", "Zoom"),
    ("security@" + COMPANY, "Security Team"),
]

LEGIT_TEMPLATES = [
    ("Team lunch on {day}", "Hi all, we are booking a table for the team lunch on {day}. Reply if you have dietary needs. {name}",
     "An ordinary internal message from a colleague with no links or requests for credentials."),
    ("Updated holiday calendar", "The {year} holiday calendar is now on the intranet homepage. No action needed.",
     "Internal announcement pointing to the known intranet without asking for any login."),
    ("Your pull request was merged", "{name} merged your pull request #{num} into main.",
     "A routine notification from the genuine service domain with no urgent call to action."),
    ("Meeting moved to {time}", "Heads up: the project sync has moved to {time} in room {room}. Same agenda.",
     "A schedule change from a known sender that asks for nothing sensitive."),
    ("Printer maintenance {day}", "Printers on floor {floor} will be offline on {day} morning for maintenance.",
     "Facilities notice that is informational only."),
    ("Reminder: security awareness training", "Please complete the annual training in the learning portal before {day}. You sign in with your usual single sign-on.",
     "Expected annual reminder that directs you to a known internal portal rather than a link to enter a password."),
    ("Payslip available", "Your payslip for {month} is available in the HR portal. We never send payslips as attachments.",
     "Payroll notice that points to the usual portal and contains no attachment or link to a login form."),
    ("Welcome {name} to the team", "Please welcome {name}, who joins the support team on {day}.",
     "A friendly internal announcement with nothing to click."),
    ("Recording of {day}'s meeting", "The cloud recording of your meeting is ready in your Zoom account under Recordings.",
     "Genuine service domain and it tells you where to find the item instead of pushing a link."),
    ("Office closed for cleaning", "The {floor} floor kitchen will be closed on {day} for deep cleaning.",
     "Routine facilities information with no request for action."),
]

PHISH_EASY = [
    ("URGENT: Your account will be DELETED", "Dear user, your mailbox is over quota and will be deleted in 24 hours. Click http://mail-verify-{num}.top/login and enter your password to keep it.",
     "Generic greeting, extreme urgency, and a link to an unrelated domain asking for your password."),
    ("You won a ${amount} gift card!!!", "Congratulations! Claim your ${amount} gift card now by entering your bank details at http://prizes-{num}.xyz.",
     "Unexpected prize, requests bank details, and links to an unknown domain."),
    ("Invoice attached - pay now", "Please open the attached invoice_{num}.zip and pay today to avoid legal action.",
     "Unexpected invoice with a compressed attachment and a legal threat."),
    ("Password expires today", "Your password expires today. Reply to this email with your current password so we can renew it.",
     "No real IT team asks you to email your password."),
    ("Package delivery failed", "We could not deliver your parcel. Pay the ${amount} redelivery fee at http://parcel-{num}.info.",
     "Unsolicited delivery fee request linking to an unrelated domain."),
    ("Bank security alert", "Your bank account is LOCKED. Verify your card number and PIN at http://secure-bank-{num}.ru.",
     "Banks never ask for a PIN, and the domain is unrelated to any bank."),
]

PHISH_MEDIUM = [
    ("Action required: verify your mailbox", "Hi {name}, we detected unusual sign-ins. Verify your account within 12 hours at https://{company_look}/verify.",
     "The link uses a lookalike of the company domain and pushes a deadline."),
    ("Shared document: Q{q} budget", "{name} shared 'Q{q} budget.xlsx' with you. Open: https://docs-share-{num}.com/view",
     "File-sharing lure hosted on a domain that is not the sharing service."),
    ("HR: updated bonus policy", "Please review the new bonus policy and confirm with your login at https://hr-{company_short}-portal.net.",
     "HR content but the portal domain is external and asks you to sign in."),
    ("Your Zoom account is suspended", "Your Zoom license was suspended due to a billing error. Update your payment at https://zoom-billing-{num}.com.",
     "Brand impersonation: the real service is zoom.us, not this domain."),
    ("IT: mandatory VPN update", "Install the attached vpn_update_{num}.exe today to keep remote access.",
     "IT never distributes software as email attachments; executables are a red flag."),
    ("Payroll change confirmation", "Your direct deposit details were changed. If this wasn't you, sign in at https://payroll-{company_short}.help to cancel.",
     "Creates alarm to get you to sign in on a non-company domain."),
]

PHISH_HARD = [
    ("Re: invoice {num}", "Hi {name}, as discussed, our bank details have changed. Please send this month's payment to the new account below. Thanks, {other}",
     "A business email compromise pattern: a reply-style message changing payment details. Verify by phone before paying."),
    ("Calendar: 1:1 moved", "I moved our 1:1. Please accept the updated invite at https://calendar.{company_look}/invite/{num}",
     "The host is a lookalike domain with one character changed."),
    ("Quick favor", "Are you at your desk? I need you to buy gift cards for a client, I'm in meetings all day. {other}",
     "Executive impersonation asking for gift cards is a classic fraud pattern."),
    ("GitHub: new SSH key added", "A new SSH key was added to your account. If this was not you, revoke it at https://github.com-security-{num}.io",
     "The domain starts with github.com but actually belongs to github.com-security-{num}.io."),
    ("Security team: phishing test results", "You failed the phishing test. Sign in at https://{company_look}/training to see your results.",
     "Impersonates the security team and uses a lookalike domain to harvest credentials."),
    ("Document signature required", "{other} sent you a contract to sign. Review it here: https://docusign.{company_short}-docs.com/sign",
     "The real signing service domain is hidden as a subdomain of an attacker-owned domain."),
]

LOOKALIKES = ["northwlnd.example", "northwind-example.com", "north-wind.example", "northwind.examp1e",
              "nothwind.example", "northwind.exarnple"]
PHISH_SENDERS = {
    "easy": ["admin@mail-verify.top", "prizes@winner-now.xyz", "billing@invoice-center.biz",
             "support@secure-bank-alert.ru", "delivery@parcel-track.info"],
    "medium": ["it-support@northwind-example.com", "hr@northwind-hr.net", "billing@zoom-billing.com",
               "no-reply@docs-share.com", "payroll@payroll-northwind.help"],
    "hard": ["ceo@northwlnd.example", "finance@north-wind.example", "noreply@github.com-security.io",
             "security@nothwind.example", "accounts@northwind.examp1e"],
}


def fill(rng, text):
    values = {
        "day": rng.choice(["Monday", "Tuesday", "Wednesday", "Thursday", "Friday"]),
        "year": str(rng.choice([2025, 2026, 2027])),
        "name": rng.choice(FIRST_NAMES),
        "other": rng.choice(FIRST_NAMES),
        "num": str(rng.randint(100, 9999)),
        "time": rng.choice(["10:00", "11:30", "14:00", "15:30"]),
        "room": rng.choice(["A1", "B2", "C3", "Orchid"]),
        "floor": rng.choice(["2nd", "3rd", "4th"]),
        "month": rng.choice(["March", "April", "May", "June"]),
        "amount": str(rng.choice([50, 100, 250, 500])),
        "q": str(rng.randint(1, 4)),
        "company_look": rng.choice(LOOKALIKES),
        "company_short": "northwind",
    }
    for key, value in values.items():
        text = text.replace("{" + key + "}", value)
    return text


def build_emails(rng, per_tier):
    items = []
    phish = {"easy": PHISH_EASY, "medium": PHISH_MEDIUM, "hard": PHISH_HARD}
    for tier in ("easy", "medium", "hard"):
        for i in range(per_tier):
            is_phishing = i % 2 == 0
            if is_phishing:
                subject, body, why = phish[tier][(i // 2) % len(phish[tier])]
                sender = rng.choice(PHISH_SENDERS[tier])
            else:
                subject, body, why = LEGIT_TEMPLATES[(i // 2) % len(LEGIT_TEMPLATES)]
                sender = rng.choice(LEGIT_SENDERS)[0]
            items.append({
                "id": f"{tier}-{i + 1:03d}",
                "sender": sender,
                "subject": fill(rng, subject),
                "body": fill(rng, body),
                "is_phishing": is_phishing,
                "explanation": fill(rng, why),
                "difficulty": tier,
            })
    return items


# ---------------------------------------------------------------- scenarios

def report(prompt, choices, correct):
    answer = choices[correct]
    shuffled = list(choices)
    random.Random(prompt).shuffle(shuffled)
    return {"prompt": prompt, "choices": shuffled, "correct": shuffled.index(answer)}


SCENARIOS = [
    {
        "id": "flood-checkout",
        "attack_type": "DoS",
        "clue_texts": {
            "servers": ["{server} is receiving {request_rate_multiplier}x its normal request rate from {distinct_sources} addresses.",
                        "Request queue on {server} is saturated: traffic is {request_rate_multiplier} times the daily baseline."],
            "messages": ["Customers report the page just spins and times out.",
                         "Nobody can load our storefront this morning."],
        },
        "owner_message": "Hi, this is the owner of {site}. My site has been unreachable for a while.",
        "report_questions": [
            report("Which metric was the clearest indicator?", ["Request rate", "Disk usage", "Open files", "Login count"], 0),
            report("What is the best immediate mitigation?", ["Rate limiting and upstream filtering", "Resetting all passwords", "Reinstalling the OS", "Disabling backups"], 0),
            report("Where did the traffic come from?", ["Many distributed addresses", "One internal workstation", "The server console", "A backup job"], 0),
            report("Which resource was exhausted?", ["Server capacity to answer requests", "Storage space", "Employee badges", "License keys"], 0),
            report("What should be monitored afterward?", ["Traffic volume baselines", "Printer queues", "Desk bookings", "Email signatures"], 0),
        ],
    },
    {
        "id": "plugin-implant",
        "attack_type": "Malware",
        "clue_texts": {
            "websites": ["An unfamiliar file {file} appeared on {site}.",
                         "File integrity check on {url}: new unsigned file {file}."],
            "servers": ["CPU on {server} climbed to {cpu_percent}% with no matching traffic increase.",
                        "{server} is running an unknown process using {cpu_percent}% CPU."],
            "messages": ["Visitors say their antivirus complains when they open the site.",
                         "Pages are loading slowly and showing odd pop-ups."],
        },
        "owner_message": "Hello, I run {site}. Something about my site seems off today.",
        "report_questions": [
            report("Where was the suspicious file found?", ["In the site's plugin directory", "In the mail queue", "On a security camera", "In DNS records"], 0),
            report("What happened to server CPU?", ["It spiked without more traffic", "It dropped to zero", "It stayed flat", "It matched a traffic spike"], 0),
            report("What is the right first response?", ["Isolate the site and remove the file", "Buy more servers", "Change the site's domain", "Ignore it until tomorrow"], 0),
            report("How should the site be restored?", ["From a known-clean backup", "By renaming the file", "By rebooting only", "By emailing users"], 0),
            report("What prevents a repeat?", ["Patching plugins and file integrity monitoring", "Longer passwords on the cameras", "Bigger disks", "A new logo"], 0),
        ],
    },
    {
        "id": "resolver-hijack",
        "attack_type": "DNS",
        "clue_texts": {
            "websites": ["Lookups for {url} now return {resolves_to} instead of {expected_address}.",
                         "Resolution check: {site} points to {resolves_to}, expected {expected_address}."],
            "messages": ["Users land on a page that looks like ours but asks for card details.",
                         "People typing our address end up somewhere else."],
        },
        "owner_message": "Hi, owner of {site} here. My visitors are getting sent to the wrong place.",
        "report_questions": [
            report("What did the resolution check show?", ["The domain resolved to a foreign address", "The server was offline", "A file was added", "A door was opened"], 0),
            report("Where were users sent?", ["To an address the company does not own", "To a maintenance page", "To the admin panel", "Nowhere"], 0),
            report("What is the first fix?", ["Correct the records and lock the registrar account", "Restart the web server", "Clear the browser cache only", "Delete the website"], 0),
            report("Which control helps verify answers?", ["Signed records with validation", "Longer page titles", "More RAM", "CAPTCHA"], 0),
            report("Who should be warned?", ["Users who may have entered data on the fake page", "Only the printer vendor", "Nobody", "The camera installer"], 0),
        ],
    },
    {
        "id": "after-hours-change",
        "attack_type": "Insider",
        "clue_texts": {
            "seccams": ["{room}: a person without a visible badge is at the rack of {server}.",
                        "{room}: someone entered after hours and is working at {server}'s console."],
            "servers": ["Configuration file {file} on {server} was modified outside any change window.",
                        "{server}: unscheduled edit to {file}."],
        },
        "owner_message": "",
        "report_questions": [
            report("What did the camera show?", ["Someone at the server rack", "An empty room", "A delivery at reception", "A fire alarm"], 0),
            report("What changed on the server?", ["A configuration file", "The DNS provider", "The website logo", "Nothing"], 0),
            report("What should happen first?", ["Revoke the person's access and preserve logs", "Publish a press release", "Delete the camera footage", "Reboot every server"], 0),
            report("Which control limits this kind of event?", ["Physical access control and change approval", "A bigger firewall", "Faster CPUs", "Spam filtering"], 0),
            report("How should the config be handled?", ["Compare against the approved baseline and revert", "Leave it", "Email it to customers", "Print it"], 0),
        ],
    },
    {
        "id": "query-tampering",
        "attack_type": "SQLInjection",
        "clue_texts": {
            "servers": ["{server} logged {queries_per_minute} malformed queries per minute from {source_ip}, e.g. {sample_query}.",
                        "Database errors on {server}: inputs like {sample_query} from {source_ip}."],
            "messages": ["A customer says they can see other people's order history.",
                         "Someone posted our customer list online."],
        },
        "owner_message": "Hello, I own {site}. I think customer data may have leaked.",
        "report_questions": [
            report("What did the server logs contain?", ["Input containing database syntax", "Camera motion", "Certificate errors", "Printer jobs"], 0),
            report("Where did the requests originate?", ["A single external address", "The server room", "Inside the database", "A USB port"], 0),
            report("What is the code-level fix?", ["Parameterized queries", "Longer URLs", "More logging only", "Disabling HTTPS"], 0),
            report("What was at risk?", ["Stored customer records", "Office keys", "Power supply", "Website colors"], 0),
            report("What else should be done?", ["Block the source and notify affected customers", "Nothing, it was just errors", "Turn off cameras", "Rename the server"], 0),
        ],
    },
    {
        "id": "found-drive",
        "attack_type": "USBDrop",
        "clue_texts": {
            "seccams": ["{room}: a staff member plugged a removable drive into {server}.",
                        "{room}: a small device was inserted into {server}'s front port."],
            "websites": ["A new executable {file} appeared on {site} after local activity on {server}.",
                         "{url}: unexpected program {file} created."],
        },
        "owner_message": "",
        "report_questions": [
            report("What did the camera record?", ["A device being plugged into the server", "A tailgater at the door", "An empty room", "A power outage"], 0),
            report("What appeared on the site?", ["A new executable file", "A changed DNS record", "A traffic spike", "A login banner"], 0),
            report("What is the first response?", ["Remove the device and isolate the server", "Share the drive with colleagues", "Ignore it", "Increase bandwidth"], 0),
            report("What policy prevents this?", ["Blocking unknown removable media", "Longer lunch breaks", "Public Wi-Fi", "Shorter passwords"], 0),
            report("What should staff be trained on?", ["Never plugging in found devices", "Forwarding chain emails", "Disabling updates", "Sharing passwords"], 0),
        ],
    },
]


def build_scenarios():
    return json.loads(json.dumps(SCENARIOS))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "content"))
    parser.add_argument("--seed", type=int, default=20240501)
    parser.add_argument("--emails-per-tier", type=int, default=40)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    packs = {
        "questions": build_questions(rng),
        "emails": build_emails(rng, args.emails_per_tier),
        "scenarios": build_scenarios(),
    }
    for kind, items in packs.items():
        doc = {"kind": kind, "version": 1, "items": items}
        (out / f"{kind}.json").write_text(json.dumps(doc, indent=2) + "\n")
        print(f"{kind}: {len(items)} items")


if __name__ == "__main__":
    main()
