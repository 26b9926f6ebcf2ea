from pydantic import BaseModel


###################### SCHEMA ###########################


class ToyKeyPair(BaseModel):
    """Textbook RSA numbers: public (n, e), private d, with e * d = 1 mod totient"""

    p: int
    q: int
    n: int
    totient: int
    e: int
    d: int

    def encrypt(self, message: int) -> int:
        return pow(message, self.e, self.n)

    def decrypt(self, ciphertext: int) -> int:
        return pow(ciphertext, self.d, self.n)
